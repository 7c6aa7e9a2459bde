#include "idealcore/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "idealcore/errors.hpp"
#include "idealcore/ring.hpp"

namespace idealcore {

std::string semantics_name(Semantics s) {
  switch (s) {
    case Semantics::AlgClosed: return "algebraically_closed_formula";
    case Semantics::RationalPoints: return "rational_points";
    case Semantics::PrimeFieldPoints: return "prime_field_points";
  }
  return "?";
}

namespace {

bool same_variety(const Ideal& a, const Ideal& b) {
  for (const Polynomial& g : a.gens())
    if (!in_radical(g, b)) return false;
  for (const Polynomial& g : b.gens())
    if (!in_radical(g, a)) return false;
  return true;
}

// Rational points of V(D) on a projective line of parameters: either the
// whole line (D = 0) or the rational roots of the gcd of the generators.
struct LinePoints {
  bool whole = false;
  std::set<std::pair<mpz_class, mpz_class>> pts;
  bool operator==(const LinePoints&) const = default;
};

std::pair<mpz_class, mpz_class> normalize_point(mpz_class a, mpz_class b) {
  mpz_class g = gcd(a, b);
  if (g != 0) {
    a /= g;
    b /= g;
  }
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

long small_abs_long(const Coeff& c, const char* what) {
  mpz_class z = c.get_num();  // primitive integer polynomial: den = 1
  if (!z.fits_slong_p())
    throw NotImplementedClass(std::string(what) +
                              ": coefficient too large for root enumeration");
  return std::labs(z.get_si());
}

std::vector<long> divisors_of(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  return out;
}

LinePoints rational_points(const Ideal& D) {
  LinePoints out;
  if (D.is_zero()) {
    out.whole = true;
    return out;
  }
  const RingCtxPtr& ctx = D.ctx();
  Polynomial g = gcd_bivariate_homogeneous(D.gens()).primitive();
  if (g.is_constant()) return out;
  // candidate roots: the two coordinate points plus (q : p) for p dividing
  // the pure-u1 coefficient and q the pure-u2 one
  std::vector<std::pair<mpz_class, mpz_class>> cands = {{0, 1}, {1, 0}};
  long d = (long)g.total_degree();
  Coeff c0(0), cd(0);
  for (const Term& t : g.terms()) {
    if (t.m.e[1] == 0) c0 = t.c;
    if (t.m.e[0] == 0) cd = t.c;
  }
  if (!FieldSpec::is_zero(c0) && !FieldSpec::is_zero(cd)) {
    for (long p : divisors_of(small_abs_long(c0, "point enumeration")))
      for (long q : divisors_of(small_abs_long(cd, "point enumeration"))) {
        if (std::gcd(p, q) != 1) continue;
        cands.push_back({q, p});
        cands.push_back({q, -p});
      }
  }
  (void)d;
  for (auto& [a, b] : cands) {
    std::map<int, Coeff> at;
    at[0] = Coeff(a);
    at[1] = Coeff(b);
    bool vanishes = true;
    for (const Polynomial& gen : D.gens())
      if (!gen.evaluate(at).is_zero()) {
        vanishes = false;
        break;
      }
    if (vanishes) out.pts.insert(normalize_point(a, b));
  }
  (void)ctx;
  return out;
}

}  // namespace

// Exhaustive projective representatives over F_p, first nonzero coordinate 1.
std::vector<std::vector<Coeff>> projective_points(int n, long p) {
  double count = (std::pow((double)p, n) - 1) / (p - 1);
  if (count > 200000)
    throw ContextError("parameter space too large for exhaustive enumeration");
  std::vector<std::vector<Coeff>> pts;
  for (int lead = 0; lead < n; ++lead) {
    std::vector<long> tail(n - lead - 1, 0);
    while (true) {
      std::vector<Coeff> pt(n, Coeff(0));
      pt[lead] = 1;
      for (int i = 0; i < (int)tail.size(); ++i)
        pt[lead + 1 + i] = Coeff(tail[i]);
      pts.push_back(std::move(pt));
      int i = (int)tail.size() - 1;
      while (i >= 0 && tail[i] == p - 1) tail[i--] = 0;
      if (i < 0) break;
      ++tail[i];
    }
  }
  return pts;
}

int big_reduction_number(const GenericReductionData& G, Semantics sem,
                         StabilizationReport* rep) {
  const GradedAlgebra& A = G.algebra();
  int n_max = G.n_max();

  // in_V[n] answers "is V_n equal to V_{n+1}" under the chosen semantics
  std::function<bool(int)> step_equal;
  std::vector<LinePoints> line;
  std::vector<std::vector<char>> membership;
  if (sem == Semantics::AlgClosed) {
    step_equal = [&](int n) {
      return same_variety(G.det_ideal(n, A.hilbert(n)),
                          G.det_ideal(n + 1, A.hilbert(n + 1)));
    };
  } else if (sem == Semantics::RationalPoints) {
    if (G.uring()->nvars() != 2)
      throw NotImplementedClass(
          "rational point bookkeeping covers one generic form in two "
          "variables (a projective line of parameters)");
    if (G.uring()->field.is_prime_field())
      throw ContextError("rational point semantics over a prime field");
    line.resize(n_max + 2);
    for (int n = 0; n <= n_max + 1; ++n)
      line[n] = rational_points(G.det_ideal(n, A.hilbert(n)));
    step_equal = [&](int n) { return line[n] == line[n + 1]; };
  } else {
    if (!G.uring()->field.is_prime_field())
      throw ContextError("prime field semantics need a prime field");
    long p = G.uring()->field.modulus;
    auto pts = projective_points(G.uring()->nvars(), p);
    membership.assign(n_max + 2, std::vector<char>(pts.size(), 0));
    for (int n = 0; n <= n_max + 1; ++n) {
      for (size_t i = 0; i < pts.size(); ++i) {
        if (n == 0) {
          membership[n][i] = 1;
          continue;
        }
        KMat ev = eval_poly_matrix(G.matrix(n), pts[i]);
        membership[n][i] = rank(ev) < A.hilbert(n) ? 1 : 0;
      }
    }
    step_equal = [&](int n) { return membership[n] == membership[n + 1]; };
  }

  int r = -1;
  int trailing = 0;
  for (int n = 0; n < n_max; ++n) {
    if (step_equal(n)) {
      ++trailing;
    } else {
      r = n;
      trailing = 0;
    }
  }
  if (r < 0 || trailing < 2)
    throw InconclusiveStabilization(
        "V_n chain not stationary within n_max=" + std::to_string(n_max) +
        "; rerun with a larger n_max");
  if (sem == Semantics::AlgClosed) G.set_r(r);
  if (rep) {
    rep->r = r;
    rep->n_max = n_max;
    rep->trailing_equal = trailing;
    rep->hilbert = A.hilbert_vector(n_max);
  }
  return r;
}

bool is_minimal_reduction(const GenericReductionData& G,
                          const std::vector<std::vector<Coeff>>& alpha,
                          int r) {
  if (r < 0) {
    if (G.r() < 0) big_reduction_number(G);
    r = G.r();
  }
  if ((int)alpha.size() != G.dim())
    throw ContextError("expected one coefficient row per generic form");
  std::vector<Coeff> point((size_t)G.dim() * G.ngens(), Coeff(0));
  const FieldSpec& f = G.uring()->field;
  for (int i = 0; i < G.dim(); ++i) {
    if ((int)alpha[i].size() != G.ngens())
      throw ContextError("coefficient row has wrong length");
    bool all_zero = true;
    for (int j = 0; j < G.ngens(); ++j) {
      point[G.uvar(i, j)] = f.reduce(alpha[i][j]);
      all_zero = all_zero && FieldSpec::is_zero(point[G.uvar(i, j)]);
    }
    if (all_zero) return false;
  }
  KMat ev = eval_poly_matrix(G.matrix(r + 1), point);
  return rank(ev) == G.algebra().hilbert(r + 1);
}

int reduction_number_graded(const GradedAlgebra& A,
                            const std::vector<Polynomial>& forms, int n_cap) {
  if (n_cap <= 0) {
    long reldeg = 0;
    for (const Polynomial& g : A.ring()->quotient_relations)
      reldeg = std::max(reldeg, g.total_degree());
    n_cap = std::max((int)(2 * reldeg) + A.nvars(), 4) + 2;
  }
  std::vector<Polynomial> Q;
  for (const Polynomial& q : forms) {
    Polynomial nf = reduce_full(transport_by_name(q, A.ring()->ambient()),
                                A.ring()->quotient_relations);
    if (nf.is_zero()) continue;
    if (!nf.is_homogeneous() || nf.total_degree() != 1)
      throw ContextError("reduction test needs linear forms: " + q.str());
    Q.push_back(nf);
  }
  if (Q.empty()) throw NotAReduction("no nonzero forms given");
  for (int n = 1; n <= n_cap; ++n) {
    std::vector<std::vector<Coeff>> rows;
    for (const Polynomial& q : Q)
      for (const Monomial& b : A.basis(n - 1)) {
        Polynomial p =
            q * Polynomial::from_monomial(A.ring()->ambient(), b, Coeff(1));
        rows.push_back(A.coordinates(p, n));
      }
    KMat m = KMat::from_rows(rows, A.hilbert(n), A.ring()->field);
    if (rank(m) == A.hilbert(n)) return n - 1;
  }
  throw NotAReduction("multiplication never fills a full degree within " +
                      std::to_string(n_cap));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> ideal_support(const Ideal& I) {
  std::vector<char> seen(I.ctx()->nvars(), 0);
  for (const Polynomial& g : I.gens())
    for (int v : g.support_vars()) seen[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < (int)seen.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

bool weighting_fits(const std::vector<mpq_class>& w,
                    const std::vector<Polynomial>& polys,
                    const std::vector<int>& positive_on) {
  for (const mpq_class& x : w)
    if (x < 0) return false;
  bool nonzero = false;
  for (const mpq_class& x : w) nonzero = nonzero || x != 0;
  if (!nonzero) return false;
  for (int v : positive_on)
    if (w[v] <= 0) return false;
  for (const Polynomial& p : polys)
    if (!p.is_weighted_homogeneous(w)) return false;
  return true;
}

}  // namespace

LocalIdealContext make_local_context(
    const RingCtxPtr& ring, Ideal I,
    std::optional<std::vector<mpq_class>> weights) {
  int m = ring->nvars();
  std::vector<Polynomial> polys = ring->quotient_relations;
  for (const Polynomial& g : I.gens())
    polys.push_back(transport_by_name(g, ring->ambient()));
  std::vector<int> supp = ideal_support(I);

  if (weights) {
    if ((int)weights->size() != m)
      throw ContextError("one weight per variable expected");
    if (!weighting_fits(*weights, polys, supp))
      throw ContextError("the given weighting does not make the input homogeneous");
    return LocalIdealContext{ring, std::move(I), std::move(*weights)};
  }

  // Solve the term constraints: inside each polynomial all exponent vectors
  // share one weighted degree.
  std::vector<std::vector<Coeff>> rows;
  for (const Polynomial& p : polys) {
    const auto& ts = p.terms();
    for (size_t k = 1; k < ts.size(); ++k) {
      std::vector<Coeff> row(m, Coeff(0));
      for (int v = 0; v < m; ++v)
        row[v] = Coeff(ts[0].m.e[v]) - Coeff(ts[k].m.e[v]);
      rows.push_back(std::move(row));
    }
  }
  KMat C = KMat::from_rows(rows, m, FieldSpec::rational());
  std::vector<std::vector<Coeff>> basis = kernel_basis(C);
  int k = (int)basis.size();
  if (k > 0) {
    // small deterministic search through integer combinations
    std::vector<int> lambda(k, 0);
    long total = 1;
    for (int i = 0; i < k && total <= 4000; ++i) total *= 5;
    if (total <= 4000) {
      for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < k; ++i) {
          lambda[i] = (int)(c % 5) - 2;
          c /= 5;
        }
        std::vector<mpq_class> w(m, 0);
        for (int i = 0; i < k; ++i)
          for (int v = 0; v < m; ++v) w[v] += lambda[i] * basis[i][v];
        if (weighting_fits(w, polys, supp))
          return LocalIdealContext{ring, std::move(I), std::move(w)};
      }
    } else {
      for (int i = 0; i < k; ++i)
        for (int s : {1, -1}) {
          std::vector<mpq_class> w(m, 0);
          for (int v = 0; v < m; ++v) w[v] = s * basis[i][v];
          if (weighting_fits(w, polys, supp))
            return LocalIdealContext{ring, std::move(I), std::move(w)};
        }
    }
  }
  throw ContextError(
      "no nonnegative variable weighting (positive on the ideal generators) "
      "makes the input homogeneous; pass weights explicitly");
}

bool local_contains(const Ideal& N, const Polynomial& f) {
  if (f.is_zero()) return true;
  Ideal C = colon(N, Ideal(N.ctx(), {transport_by_name(f, N.ctx())}));
  for (const Polynomial& g : C.groebner()) {
    if (g.is_zero()) continue;
    const Term& tail = g.terms().back();
    if (tail.m.is_one() && !FieldSpec::is_zero(tail.c)) return true;
  }
  return false;
}

bool local_contains_ideal(const Ideal& N, const Ideal& M) {
  for (const Polynomial& g : M.gens())
    if (!local_contains(N, g)) return false;
  return true;
}

bool local_ideal_equal(const Ideal& a, const Ideal& b) {
  return local_contains_ideal(a, b) && local_contains_ideal(b, a);
}

int reduction_number_ideal(const LocalIdealContext& L, const Ideal& J,
                           int cap) {
  if (!local_contains_ideal(L.I, J))
    throw ContextError("candidate reduction is not inside the ideal");
  Ideal In = Ideal::unit(L.ring);  // I^n
  Ideal In1 = L.I;                 // I^{n+1}
  for (int n = 0; n <= cap; ++n) {
    Ideal left = product_ideal(J, In);
    if (local_contains_ideal(left, In1)) return n;
    In = std::move(In1);
    In1 = product_ideal(In, L.I);
  }
  throw NotAReduction("J I^n never catches I^{n+1} within n <= " +
                      std::to_string(cap));
}

// ---------------------------------------------------------------------------

GenericExtension extend_by_generic_forms(const RingCtxPtr& ring,
                                         const GenericReductionData& G) {
  std::vector<std::string> names = ring->vars;
  for (const std::string& u : G.uring()->vars) names.push_back(u);
  RingCtxPtr plain = RingContext::make(names, ring->field, ring->order);
  std::vector<Polynomial> rel;
  for (const Polynomial& g : ring->quotient_relations)
    rel.push_back(transport_by_name(g, plain));
  GenericExtension E;
  E.ext = make_quotient_ring(plain, rel);
  for (int i = 0; i < G.dim(); ++i) {
    Polynomial bi = Polynomial::zero(E.ext);
    for (int j = 0; j < G.ngens(); ++j) {
      int xj = E.ext->var_index(ring->vars[j]);
      int uij = E.ext->var_index(G.uring()->vars[G.uvar(i, j)]);
      bi = bi + Polynomial::from_monomial(
                    E.ext,
                    Monomial::var(E.ext->nvars(), xj) *
                        Monomial::var(E.ext->nvars(), uij),
                    Coeff(1));
    }
    E.forms.push_back(std::move(bi));
  }
  return E;
}

Ideal contract_generic(const Ideal& K, const RingCtxPtr& ring,
                      const RingCtxPtr& uring) {
  std::vector<int> drop;
  for (const std::string& u : uring->vars)
    drop.push_back(K.ctx()->var_index(u));
  Ideal E = eliminate(K, drop);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : E.gens())
    gens.push_back(transport_by_name(g, ring));
  return Ideal(ring, trim_generators(std::move(gens)));
}

ColonChain colon_chain(const LocalIdealContext& L) {
  ColonChain out;
  const RingCtxPtr& ring = L.ring;
  std::vector<Polynomial> vars;
  for (int v = 0; v < ring->nvars(); ++v)
    vars.push_back(Polynomial::variable(ring, v));
  bool is_full = local_ideal_equal(L.I, Ideal(ring, vars));

  if (is_full) {
    GradedAlgebra A;
    try {
      A = GradedAlgebra::from_ring(ring);
    } catch (const ContextError&) {
      throw NotImplementedClass(
          "generic column data needs a standard graded presentation");
    }
    GenericReductionData G = build_generic_data(A);
    out.r = big_reduction_number(G);
    GenericExtension E = extend_by_generic_forms(ring, G);
    Ideal Q(E.ext, E.forms);
    std::vector<Polynomial> jl;
    for (const Polynomial& g : G.J().gens())
      jl.push_back(transport_by_name(g, E.ext));
    Ideal Jext(E.ext, jl);
    std::vector<Polynomial> il;
    for (const Polynomial& g : L.I.gens())
      il.push_back(transport_by_name(g, E.ext));
    Ideal Iext(E.ext, il);
    Ideal Ir = power_ideal(Iext, out.r);
    Ideal Ir1 = product_ideal(Ir, Iext);

    out.power = power_ideal(L.I, out.r + 1);
    out.inner = contract_generic(colon(Q, colon(Q, Ir1)), ring, G.uring());
    out.middle = contract_generic(
        colon(Q, colon(product_ideal(Ir, Q), Ir1)), ring, G.uring());
    out.outer = contract_generic(saturate(Q, Jext), ring, G.uring());
    std::string jdesc;
    for (const Polynomial& g : G.J().gens())
      jdesc += (jdesc.empty() ? "" : ", ") + g.str();
    out.notes.push_back("generic minor ideal = (" + jdesc + ")");
  } else if (L.I.gens().size() == 1) {
    // a single generator reduces only to itself: the whole chain sits at I
    out.r = 0;
    const Polynomial& a = L.I.gens()[0];
    std::vector<std::string> names = ring->vars;
    names.push_back(fresh_var_name(names, "u1"));
    RingCtxPtr plain = RingContext::make(names, ring->field, ring->order);
    std::vector<Polynomial> rel;
    for (const Polynomial& g : ring->quotient_relations)
      rel.push_back(transport_by_name(g, plain));
    RingCtxPtr ext = make_quotient_ring(plain, rel);
    Polynomial u1 = Polynomial::variable(ext, ext->nvars() - 1);
    Ideal Q(ext, {u1 * transport_by_name(a, ext)});
    Ideal Iext(ext, {transport_by_name(a, ext)});
    RingCtxPtr uonly = RingContext::make({names.back()}, ring->field);

    out.power = L.I;
    out.inner = contract_generic(colon(Q, colon(Q, Iext)), ring, uonly);
    out.middle = out.inner;
    out.outer = contract_generic(saturate(Q, Ideal::principal(u1)), ring, uonly);
    out.notes.push_back("principal ideal: generic minor ideal = (u1)");
  } else {
    throw NotImplementedClass(
        "generic column data is built for the full variable ideal or a "
        "principal ideal only");
  }

  out.chain_ok = out.inner.contains_ideal(out.power) &&
                 out.middle.contains_ideal(out.inner) &&
                 out.outer.contains_ideal(out.middle);
  return out;
}

FiberRing fiber_ring(const LocalIdealContext& L) {
  const RingCtxPtr& ring = L.ring;
  std::vector<Polynomial> a;
  for (const Polynomial& g : L.I.gens())
    if (!g.is_zero()) a.push_back(g);
  if (a.empty()) throw ContextError("fiber of the zero ideal");

  std::vector<std::string> names = ring->vars;
  int nx = (int)names.size();
  std::string tname = fresh_var_name(names, "t");
  names.push_back(tname);
  std::vector<std::string> tnames;
  for (size_t j = 0; j < a.size(); ++j) {
    tnames.push_back(fresh_var_name(names, "T" + std::to_string(j + 1)));
    names.push_back(tnames.back());
  }
  RingCtxPtr plain = RingContext::make(names, ring->field, ring->order);
  std::vector<Polynomial> rel;
  for (const Polynomial& g : ring->quotient_relations)
    rel.push_back(transport_by_name(g, plain));
  RingCtxPtr ext = make_quotient_ring(plain, rel);

  std::vector<Polynomial> rees;
  Polynomial t = Polynomial::variable(ext, nx);
  for (size_t j = 0; j < a.size(); ++j)
    rees.push_back(Polynomial::variable(ext, nx + 1 + (int)j) -
                   t * transport_by_name(a[j], ext));
  Ideal K = eliminate(Ideal(ext, std::move(rees)), {nx});

  std::map<int, Coeff> at_zero;
  for (int v = 0; v < nx; ++v) {
    int idx = K.ctx()->var_index(ring->vars[v]);
    if (idx >= 0) at_zero[idx] = Coeff(0);
  }
  FiberRing F;
  F.tring = RingContext::make(tnames, ring->field);
  std::vector<Polynomial> relations;
  for (const Polynomial& g : K.reduced_generators()) {
    Polynomial s = g.evaluate(at_zero);
    if (s.is_zero()) continue;
    relations.push_back(transport_by_name(s, F.tring));
  }
  F.relations = trim_generators(std::move(relations));
  F.graded = true;
  for (const Polynomial& g : F.relations)
    F.graded = F.graded && g.is_homogeneous();
  if (F.graded) F.algebra = GradedAlgebra::make(F.tring, F.relations);
  return F;
}

}  // namespace idealcore
