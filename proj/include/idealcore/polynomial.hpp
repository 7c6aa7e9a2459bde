#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idealcore/field.hpp"
#include "idealcore/monomial.hpp"

namespace idealcore {

struct RingContext;
using RingCtxPtr = std::shared_ptr<const RingContext>;

struct Term {
  Monomial m;
  Coeff c;
};

// Sparse polynomial: terms strictly descending in the context's active order,
// all coefficients nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingCtxPtr ctx) : ctx_(std::move(ctx)) {}
  Polynomial(RingCtxPtr ctx, std::vector<Term> terms);  // normalizes

  static Polynomial zero(RingCtxPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(RingCtxPtr ctx, const Coeff& c);
  static Polynomial variable(RingCtxPtr ctx, int i);
  static Polynomial from_monomial(RingCtxPtr ctx, const Monomial& m,
                                  const Coeff& c);

  const RingCtxPtr& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& lt() const { return terms_.front(); }  // requires nonzero
  const Monomial& lm() const { return terms_.front().m; }
  const Coeff& lc() const { return terms_.front().c; }

  long total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  // weighted-homogeneity; weights indexed by variable
  bool is_weighted_homogeneous(const std::vector<mpq_class>& w,
                               mpq_class* deg_out = nullptr) const;
  std::vector<int> support_vars() const;  // indices of variables that occur
  bool uses_var(int i) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial mul_term(const Monomial& m, const Coeff& c) const;
  Polynomial pow(int n) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial monic() const;
  // Scale by a rational so coefficients become coprime integers with positive
  // leading sign (identity on prime fields after making monic).
  Polynomial primitive() const;

  // Partial substitution: vars present in `values` are replaced by field
  // elements; others stay symbolic.
  Polynomial evaluate(const std::map<int, Coeff>& values) const;

  std::string str() const;  // canonical form

  // Total, deterministic order on polynomials of one context (used for
  // canonical generator sorting): by lead monomial, then lexicographic on the
  // remaining terms, then coefficients.
  static int compare(const Polynomial& a, const Polynomial& b);

 private:
  RingCtxPtr ctx_;
  std::vector<Term> terms_;
  void normalize();
};

// Text form parser for the context's grammar: integer literals, identifiers,
// '+', '-', '*', '^' and parentheses; no implicit multiplication.
Polynomial parse_polynomial(const RingCtxPtr& ctx, const std::string& text);

// f = q * g exactly, in the ambient polynomial ring; throws ContextError if
// the division leaves a remainder.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// gcd of univariate polynomials (in the same single variable), monic result.
Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b);

// Squarefree part for the supported classes: univariate (any single variable)
// and homogeneous in exactly two variables. Throws NotImplementedClass
// otherwise; over F_p requires deg f < p.
Polynomial squarefree_part(const Polynomial& f);

// gcd of a list of homogeneous polynomials in at most two variables.
Polynomial gcd_bivariate_homogeneous(const std::vector<Polynomial>& fs);

Polynomial derivative(const Polynomial& f, int var);

}  // namespace idealcore
