#include "idealcore/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "idealcore/errors.hpp"
#include "idealcore/ring.hpp"

namespace idealcore {

namespace {

void check_same_ctx(const Polynomial& a, const Polynomial& b) {
  if (!a.ctx() || !b.ctx())
    throw ContextError("polynomial without ring context");
  if (a.ctx() != b.ctx() && !a.ctx()->same_presentation(*b.ctx()))
    throw ContextError("mixed ring contexts in polynomial arithmetic");
}

}  // namespace

Polynomial::Polynomial(RingCtxPtr ctx, std::vector<Term> terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const FieldSpec& F = ctx_->field;
  for (auto& t : terms_) t.c = F.reduce(t.c);
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ctx_->order.greater(a.m, b.m);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c = F.add(out.back().c, t.c);
    else
      out.push_back(std::move(t));
    if (!out.empty() && FieldSpec::is_zero(out.back().c)) out.pop_back();
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingCtxPtr ctx, const Coeff& c) {
  int n = ctx->nvars();
  return Polynomial(std::move(ctx), {Term{Monomial::one(n), c}});
}

Polynomial Polynomial::variable(RingCtxPtr ctx, int i) {
  int n = ctx->nvars();
  return Polynomial(std::move(ctx), {Term{Monomial::var(n, i), Coeff(1)}});
}

Polynomial Polynomial::from_monomial(RingCtxPtr ctx, const Monomial& m,
                                     const Coeff& c) {
  return Polynomial(std::move(ctx), {Term{m, c}});
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.deg());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = terms_[0].m.deg();
  for (const auto& t : terms_)
    if (t.m.deg() != d) return false;
  return true;
}

bool Polynomial::is_weighted_homogeneous(const std::vector<mpq_class>& w,
                                         mpq_class* deg_out) const {
  if (terms_.empty()) return true;
  auto wdeg = [&](const Monomial& m) {
    mpq_class d = 0;
    for (int i = 0; i < m.nvars(); ++i) d += w[i] * m.e[i];
    return d;
  };
  mpq_class d0 = wdeg(terms_[0].m);
  for (const auto& t : terms_)
    if (wdeg(t.m) != d0) return false;
  if (deg_out) *deg_out = d0;
  return true;
}

std::vector<int> Polynomial::support_vars() const {
  std::vector<char> seen(ctx_->nvars(), 0);
  for (const auto& t : terms_)
    for (int i = 0; i < t.m.nvars(); ++i)
      if (t.m.e[i]) seen[i] = 1;
  std::vector<int> out;
  for (int i = 0; i < (int)seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

bool Polynomial::uses_var(int i) const {
  for (const auto& t : terms_)
    if (t.m.e[i]) return true;
  return false;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ctx(*this, o);
  const FieldSpec& F = ctx_->field;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ctx_->order.cmp(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff s = F.add(terms_[i].c, o.terms_[j].c);
      if (!FieldSpec::is_zero(s)) out.push_back(Term{terms_[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial r(ctx_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = ctx_->field.neg(t.c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coeff& c) const {
  const FieldSpec& F = ctx_->field;
  Coeff cr = F.reduce(c);
  if (FieldSpec::is_zero(cr)) return Polynomial::zero(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.m * m, F.mul(t.c, cr)});
  return r;  // multiplying by a monomial preserves strict descending order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ctx(*this, o);
  if (is_zero() || o.is_zero()) return Polynomial::zero(ctx_);
  const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
  Polynomial acc = Polynomial::zero(ctx_);
  for (const auto& t : small.terms_) acc = acc + big.mul_term(t.m, t.c);
  return acc;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  return mul_term(Monomial::one(ctx_->nvars()), c);
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw ContextError("negative polynomial power");
  Polynomial r = Polynomial::constant(ctx_, Coeff(1));
  Polynomial b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = (n >>= 1) ? b * b : b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
      return false;
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const FieldSpec& F = ctx_->field;
  Coeff icl = F.inv(lc());
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = F.mul(t.c, icl);
  return r;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  if (ctx_->field.is_prime_field()) return monic();
  mpz_class den(1);
  for (const auto& t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
  mpz_class num(0);
  for (const auto& t : terms_) {
    mpz_class n = t.c.get_num() * (den / t.c.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
  }
  if (sgn(lc()) < 0) num = -num;
  Coeff scale(den, num);
  scale.canonicalize();
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.c *= scale;
    t.c.canonicalize();
  }
  return r;
}

Polynomial Polynomial::evaluate(const std::map<int, Coeff>& values) const {
  const FieldSpec& F = ctx_->field;
  Polynomial acc = Polynomial::zero(ctx_);
  for (const auto& t : terms_) {
    Coeff c = t.c;
    Monomial m = t.m;
    for (const auto& [i, v] : values) {
      if (m.e[i] == 0) continue;
      Coeff vr = F.reduce(v);
      for (int k = 0; k < m.e[i]; ++k) c = F.mul(c, vr);
      m.e[i] = 0;
    }
    acc = acc + Polynomial(ctx_, {Term{m, c}});
  }
  return acc;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  const auto& ord = a.ctx()->order;
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = ord.cmp(a.terms_[i].m, b.terms_[i].m);
    if (c) return c;
  }
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  for (size_t i = 0; i < n; ++i) {
    int c = cmp(a.terms_[i].c, b.terms_[i].c);
    if (c) return c;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// printing

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.c;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    bool coeff_is_one = FieldSpec::is_one(c);
    if (!coeff_is_one || t.m.is_one()) os << FieldSpec::str(c);
    bool printed_factor = !coeff_is_one || t.m.is_one();
    for (int i = 0; i < t.m.nvars(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (printed_factor) os << "*";
      os << ctx_->vars[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      printed_factor = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& text) : s(text) {}

  void advance() {
    if (pos < s.size()) {
      if (s[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) advance();
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, col);
  }
};

struct PolyParser {
  Lexer lx;
  const RingCtxPtr& ctx;

  PolyParser(const std::string& text, const RingCtxPtr& c) : lx(text), ctx(c) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (!lx.eof()) lx.fail("unexpected trailing input");
    return p;
  }

  Polynomial expr() {
    bool neg = false;
    if (lx.peek() == '-') {
      lx.advance();
      neg = true;
    } else if (lx.peek() == '+') {
      lx.advance();
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      char c = lx.peek();
      if (c == '+') {
        lx.advance();
        acc = acc + term();
      } else if (c == '-') {
        lx.advance();
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lx.peek() == '*') {
      lx.advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (lx.peek() == '^') {
      lx.advance();
      long e = integer_literal();
      if (e < 0) lx.fail("negative exponent");
      return b.pow((int)e);
    }
    return b;
  }

  long integer_literal() {
    lx.skip_ws();
    if (lx.pos >= lx.s.size() || !std::isdigit((unsigned char)lx.s[lx.pos]))
      lx.fail("expected integer");
    std::string digits;
    while (lx.pos < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.pos])) {
      digits.push_back(lx.s[lx.pos]);
      lx.advance();
    }
    if (digits.size() > 9) lx.fail("integer literal too large for an exponent");
    return std::stol(digits);
  }

  Polynomial base() {
    char c = lx.peek();
    if (c == '(') {
      lx.advance();
      Polynomial p = expr();
      if (lx.peek() != ')') lx.fail("expected ')'");
      lx.advance();
      return p;
    }
    if (std::isdigit((unsigned char)c)) {
      std::string digits;
      while (lx.pos < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.pos])) {
        digits.push_back(lx.s[lx.pos]);
        lx.advance();
      }
      return Polynomial::constant(ctx, ctx->field.reduce(Coeff(mpz_class(digits))));
    }
    if (std::isalpha((unsigned char)c)) {
      std::string name;
      while (lx.pos < lx.s.size() &&
             (std::isalnum((unsigned char)lx.s[lx.pos]) || lx.s[lx.pos] == '_')) {
        name.push_back(lx.s[lx.pos]);
        lx.advance();
      }
      int idx = ctx->var_index(name);
      if (idx < 0) lx.fail("unknown variable '" + name + "'");
      return Polynomial::variable(ctx, idx);
    }
    lx.fail("unexpected character in polynomial");
  }
};

}  // namespace

Polynomial parse_polynomial(const RingCtxPtr& ctx, const std::string& text) {
  PolyParser p(text, ctx);
  return p.parse();
}

// ---------------------------------------------------------------------------
// exact division and gcd helpers

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw ContextError("exact division by zero");
  const RingCtxPtr& ctx = f.ctx();
  const FieldSpec& F = ctx->field;
  Polynomial rem = f;
  Polynomial q = Polynomial::zero(ctx);
  while (!rem.is_zero()) {
    if (!g.lm().divides(rem.lm()))
      throw ContextError("division not exact");
    Monomial m = g.lm().quotient_of(rem.lm());
    Coeff c = F.div(rem.lc(), g.lc());
    q = q + Polynomial::from_monomial(ctx, m, c);
    rem = rem - g.mul_term(m, c);
  }
  return q;
}

namespace {

// degree in a single variable (the only one used)
int uni_deg(const Polynomial& f, int var) {
  int d = -1;
  for (const auto& t : f.terms()) d = std::max(d, (int)t.m.e[var]);
  return d;
}

// remainder of univariate division
Polynomial uni_rem(Polynomial a, const Polynomial& b, int var) {
  const RingCtxPtr& ctx = a.ctx();
  const FieldSpec& F = ctx->field;
  int db = uni_deg(b, var);
  Coeff blc;
  for (const auto& t : b.terms())
    if (t.m.e[var] == db) blc = t.c;
  while (!a.is_zero() && uni_deg(a, var) >= db) {
    int da = uni_deg(a, var);
    Coeff alc;
    for (const auto& t : a.terms())
      if (t.m.e[var] == da) alc = t.c;
    Monomial shift = Monomial::var(ctx->nvars(), var, da - db);
    a = a - b.mul_term(shift, F.div(alc, blc));
  }
  return a;
}

}  // namespace

Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b) {
  const RingCtxPtr& ctx = a.ctx();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  int var = -1;
  for (int i : a.support_vars()) var = i;
  for (int i : b.support_vars()) {
    if (var >= 0 && i != var && !a.is_constant() && !b.is_constant())
      throw ContextError("gcd_univariate: polynomials in different variables");
    if (var < 0) var = i;
  }
  if (var < 0) return Polynomial::constant(ctx, Coeff(1));
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = uni_rem(x, y, var);
    x = y;
    y = r;
  }
  return x.monic();
}

Polynomial derivative(const Polynomial& f, int var) {
  const RingCtxPtr& ctx = f.ctx();
  const FieldSpec& F = ctx->field;
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.m.e[var] == 0) continue;
    Term nt = t;
    nt.c = F.mul(t.c, F.from_long(t.m.e[var]));
    nt.m.e[var] -= 1;
    if (!FieldSpec::is_zero(nt.c)) out.push_back(nt);
  }
  return Polynomial(ctx, std::move(out));
}

namespace {

Polynomial squarefree_univariate(const Polynomial& f, int var) {
  const FieldSpec& F = f.ctx()->field;
  if (F.is_prime_field() && uni_deg(f, var) >= F.modulus)
    throw NotImplementedClass(
        "squarefree_part over F_p requires deg(f) < p",
        "univariate char-p degree guard");
  Polynomial fp = derivative(f, var);
  if (fp.is_zero())
    throw NotImplementedClass("squarefree_part: vanishing derivative",
                              "univariate derivative check");
  Polynomial g = gcd_univariate(f, fp);
  return exact_divide(f, g).monic();
}

}  // namespace

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw ContextError("squarefree_part of zero");
  const RingCtxPtr& ctx = f.ctx();
  std::vector<int> sup = f.support_vars();
  if (sup.empty()) return Polynomial::constant(ctx, Coeff(1));
  if (sup.size() == 1) return squarefree_univariate(f.monic(), sup[0]);
  if (sup.size() == 2 && f.is_homogeneous()) {
    int v = sup[0], w = sup[1];
    // dehomogenize with respect to w, take the univariate squarefree part,
    // rehomogenize, and restore w with exponent min(1, multiplicity).
    int wmin = INT32_MAX;
    for (const auto& t : f.terms()) wmin = std::min(wmin, (int)t.m.e[w]);
    std::vector<Term> dehom;
    for (const auto& t : f.terms()) {
      Term nt = t;
      nt.m.e[w] = 0;
      dehom.push_back(nt);
    }
    Polynomial g(ctx, std::move(dehom));
    Polynomial sf = squarefree_univariate(g.monic(), v);
    int d = uni_deg(sf, v);
    std::vector<Term> rehom;
    for (const auto& t : sf.terms()) {
      Term nt = t;
      nt.m.e[w] = d - t.m.e[v];
      rehom.push_back(nt);
    }
    Polynomial result(ctx, std::move(rehom));
    if (wmin > 0) result = result * Polynomial::variable(ctx, w);
    return result.monic();
  }
  throw NotImplementedClass(
      "squarefree_part supports univariate and homogeneous bivariate input",
      "support=" + std::to_string(sup.size()) +
          " homogeneous=" + (f.is_homogeneous() ? std::string("yes") : std::string("no")));
}

Polynomial gcd_bivariate_homogeneous(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw ContextError("gcd of empty list");
  const RingCtxPtr& ctx = fs[0].ctx();
  std::vector<char> sup(ctx->nvars(), 0);
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous())
      throw NotImplementedClass("gcd_bivariate_homogeneous: inhomogeneous input",
                                "homogeneity check");
    for (int i : f.support_vars()) sup[i] = 1;
  }
  std::vector<int> vars;
  for (int i = 0; i < ctx->nvars(); ++i)
    if (sup[i]) vars.push_back(i);
  if (vars.empty()) {
    for (const auto& f : fs)
      if (!f.is_zero()) return Polynomial::constant(ctx, Coeff(1));
    return Polynomial::zero(ctx);
  }
  if (vars.size() == 1) {
    Polynomial g = Polynomial::zero(ctx);
    for (const auto& f : fs)
      if (!f.is_zero()) g = gcd_univariate(g, f);
    return g;
  }
  if (vars.size() > 2)
    throw NotImplementedClass("gcd_bivariate_homogeneous: more than 2 variables",
                              "support check");
  int v = vars[0], w = vars[1];
  // common w-multiplicity, then univariate gcd of the dehomogenizations
  int wmin = INT32_MAX;
  bool any = false;
  Polynomial g = Polynomial::zero(ctx);
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    any = true;
    int fw = INT32_MAX;
    for (const auto& t : f.terms()) fw = std::min(fw, (int)t.m.e[w]);
    wmin = std::min(wmin, fw);
    std::vector<Term> dehom;
    for (const auto& t : f.terms()) {
      Term nt = t;
      nt.m.e[w] = 0;
      dehom.push_back(nt);
    }
    g = gcd_univariate(g, Polynomial(ctx, std::move(dehom)));
  }
  if (!any) return Polynomial::zero(ctx);
  int d = uni_deg(g, v);
  std::vector<Term> rehom;
  for (const auto& t : g.terms()) {
    Term nt = t;
    nt.m.e[w] = d - t.m.e[v] + wmin;
    rehom.push_back(nt);
  }
  return Polynomial(ctx, std::move(rehom)).monic();
}

}  // namespace idealcore
