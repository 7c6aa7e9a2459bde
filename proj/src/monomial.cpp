#include "idealcore/monomial.hpp"

namespace idealcore {

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

// Graded reverse lexicographic: higher total degree wins; on ties the
// monomial with the smaller exponent in the last differing variable wins.
int cmp_grevlex(const Monomial& a, const Monomial& b) {
  long da = a.deg(), db = b.deg();
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.e.size(); i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

// grevlex restricted to the variables selected by mask (sel != 0 selects).
int cmp_grevlex_masked(const Monomial& a, const Monomial& b,
                       const std::vector<char>& mask, char sel) {
  long da = 0, db = 0;
  for (size_t i = 0; i < a.e.size(); ++i)
    if ((mask[i] != 0) == (sel != 0)) {
      da += a.e[i];
      db += b.e[i];
    }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.e.size(); i-- > 0;)
    if ((mask[i] != 0) == (sel != 0) && a.e[i] != b.e[i])
      return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::Lex:
      return cmp_lex(a, b);
    case Kind::GrevLex:
      return cmp_grevlex(a, b);
    case Kind::Block: {
      int c = cmp_grevlex_masked(a, b, block, 1);
      if (c) return c;
      return cmp_grevlex_masked(a, b, block, 0);
    }
  }
  return 0;
}

}  // namespace idealcore
