#include "idealcore/field.hpp"

namespace idealcore {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(long p) {
  if (p < 2 || p >= (1L << 31) || !is_prime(p))
    throw ContextError("prime field modulus must be a prime < 2^31, got " +
                       std::to_string(p));
  return FieldSpec{Kind::PrimeField, p};
}

namespace {

long mod_pos(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

// Inverse of a mod p, a in (0, p).
long mod_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw ContextError("element not invertible mod p");
  return mod_pos(t, p);
}

long to_long(const Coeff& a) { return mpz_get_si(a.get_num_mpz_t()); }

}  // namespace

Coeff FieldSpec::from_long(long v) const {
  if (kind == Kind::Rational) return Coeff(v);
  return Coeff(mod_pos(v, modulus));
}

Coeff FieldSpec::reduce(const Coeff& v) const {
  if (kind == Kind::Rational) return v;
  mpz_class num = v.get_num(), den = v.get_den();
  mpz_class p(modulus);
  mpz_class nr = num % p, dr = den % p;
  long n = mod_pos(nr.get_si(), modulus);
  long d = mod_pos(dr.get_si(), modulus);
  if (d == 0) throw ContextError("denominator divisible by field characteristic");
  if (d != 1) n = (long)(((unsigned long long)n * mod_inv(d, modulus)) % (unsigned long long)modulus);
  return Coeff(n);
}

Coeff FieldSpec::add(const Coeff& a, const Coeff& b) const {
  if (kind == Kind::Rational) return a + b;
  return Coeff(mod_pos(to_long(a) + to_long(b), modulus));
}

Coeff FieldSpec::sub(const Coeff& a, const Coeff& b) const {
  if (kind == Kind::Rational) return a - b;
  return Coeff(mod_pos(to_long(a) - to_long(b), modulus));
}

Coeff FieldSpec::mul(const Coeff& a, const Coeff& b) const {
  if (kind == Kind::Rational) return a * b;
  unsigned long long prod =
      (unsigned long long)to_long(a) * (unsigned long long)to_long(b);
  return Coeff((long)(prod % (unsigned long long)modulus));
}

Coeff FieldSpec::div(const Coeff& a, const Coeff& b) const {
  if (is_zero(b)) throw ContextError("division by zero field element");
  if (kind == Kind::Rational) return a / b;
  return mul(a, inv(b));
}

Coeff FieldSpec::neg(const Coeff& a) const {
  if (kind == Kind::Rational) return -a;
  return Coeff(mod_pos(-to_long(a), modulus));
}

Coeff FieldSpec::inv(const Coeff& a) const {
  if (is_zero(a)) throw ContextError("inverse of zero field element");
  if (kind == Kind::Rational) return 1 / a;
  return Coeff(mod_inv(to_long(a), modulus));
}

std::string FieldSpec::str(const Coeff& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

std::string FieldSpec::describe() const {
  if (kind == Kind::Rational) return "Q";
  return "Fp " + std::to_string(modulus);
}

}  // namespace idealcore
