#pragma once

#include <cstdint>
#include <vector>

namespace idealcore {

// Exponent vector; the variable list lives in the ring context.
struct Monomial {
  std::vector<int32_t> e;

  static Monomial one(int nvars) { return Monomial{std::vector<int32_t>(nvars, 0)}; }
  static Monomial var(int nvars, int i, int exp = 1) {
    Monomial m = one(nvars);
    m.e[i] = exp;
    return m;
  }

  int nvars() const { return (int)e.size(); }
  long deg() const {
    long d = 0;
    for (int32_t x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (int32_t x : e)
      if (x) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  // quotient o / this (caller guarantees divisibility the other way: *this | o)
  Monomial quotient_of(const Monomial& o) const {
    Monomial r = o;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < a.e.size(); ++i)
      if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
  }
  bool coprime_with(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  Monomial squarefree() const {
    Monomial r = *this;
    for (auto& x : r.e)
      if (x > 1) x = 1;
    return r;
  }
  bool operator==(const Monomial&) const = default;
};

struct MonomialOrder {
  enum class Kind { Lex, GrevLex, Block };
  Kind kind = Kind::GrevLex;
  // Block: variables with block[i] != 0 form the leading (eliminated) block.
  // Both halves are compared by grevlex.
  std::vector<char> block;

  static MonomialOrder lex() { return {Kind::Lex, {}}; }
  static MonomialOrder grevlex() { return {Kind::GrevLex, {}}; }
  static MonomialOrder block_elim(std::vector<char> mask) {
    return {Kind::Block, std::move(mask)};
  }

  // trichotomy: negative if a < b, 0 if equal, positive if a > b
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
  bool operator==(const MonomialOrder&) const = default;
};

}  // namespace idealcore
