#pragma once

#include <gmpxx.h>

#include <string>

#include "idealcore/errors.hpp"

namespace idealcore {

// Exact field element. Rationals are kept reduced by mpq_class itself;
// prime-field values are canonical representatives in [0, p) with
// denominator 1.
using Coeff = mpq_class;

bool is_prime(long n);

struct FieldSpec {
  enum class Kind { Rational, PrimeField };
  Kind kind = Kind::Rational;
  long modulus = 0;  // prime < 2^31, PrimeField only

  static FieldSpec rational() { return FieldSpec{Kind::Rational, 0}; }
  static FieldSpec prime_field(long p);

  bool operator==(const FieldSpec&) const = default;
  bool is_prime_field() const { return kind == Kind::PrimeField; }

  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return Coeff(1); }
  Coeff from_long(long v) const;
  // Canonicalize an arbitrary rational into this field. For prime fields the
  // denominator must be invertible mod p.
  Coeff reduce(const Coeff& v) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;

  static bool is_zero(const Coeff& a) { return sgn(a) == 0; }
  static bool is_one(const Coeff& a) { return a == 1; }

  // Canonical text form: integers print bare, non-integral rationals as "a/b".
  static std::string str(const Coeff& a);

  std::string describe() const;
};

}  // namespace idealcore
