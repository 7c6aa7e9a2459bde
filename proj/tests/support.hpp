#pragma once

// Shared fixture builders and property drivers. Both the unit suites and the
// acceptance gate run the same drivers so a regression cannot pass one and
// slip through the other.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "idealcore/core.hpp"

namespace testsupport {

using namespace idealcore;

inline RingCtxPtr quot(const std::vector<std::string>& vars,
                       const std::vector<std::string>& rels,
                       FieldSpec f = FieldSpec::rational()) {
  RingCtxPtr amb = RingContext::make(vars, f);
  if (rels.empty()) return amb;
  std::vector<Polynomial> ps;
  for (const std::string& s : rels) ps.push_back(parse_polynomial(amb, s));
  return make_quotient_ring(amb, ps);
}

inline Polynomial pp(const RingCtxPtr& R, const std::string& s) {
  return parse_polynomial(R, s);
}

inline Ideal idl(const RingCtxPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const std::string& s : gens) ps.push_back(parse_polynomial(R, s));
  return Ideal(R, ps);
}

inline Ideal var_ideal(const RingCtxPtr& R) {
  std::vector<Polynomial> ps;
  for (const std::string& v : R->vars) ps.push_back(parse_polynomial(R, v));
  return Ideal(R, ps);
}

// ---------------------------------------------------------------------------
// fixture rings

inline RingCtxPtr ring_saturation_gap(FieldSpec f = FieldSpec::rational()) {
  return quot({"x1", "x2"}, {"x1^2*x2^2", "x2^5"}, f);
}
inline RingCtxPtr ring_two_strata_real(FieldSpec f = FieldSpec::rational()) {
  return quot({"x1", "x2"}, {"x1^3*x2+x1*x2^3", "x2^5"}, f);
}
inline RingCtxPtr ring_two_strata_complex(FieldSpec f = FieldSpec::rational()) {
  return quot({"x1", "x2"}, {"x1^2*x2+x2^3", "x2^4"}, f);
}
inline RingCtxPtr ring_contraction_gap(FieldSpec f = FieldSpec::rational()) {
  return quot({"x1", "x2"}, {"x1*x2", "x2^3"}, f);
}
inline RingCtxPtr ring_cubic(FieldSpec f = FieldSpec::rational()) {
  return quot({"x1", "x2"}, {"x2^3"}, f);
}
inline RingCtxPtr ring_semigroup(FieldSpec f = FieldSpec::rational()) {
  return quot({"X", "Y"}, {"X^4-Y^3"}, f);
}
inline RingCtxPtr ring_depth_guard(FieldSpec f = FieldSpec::rational()) {
  return quot({"x1", "x2"}, {"x1*x2", "x2^2"}, f);
}
inline RingCtxPtr ring_four_vars(FieldSpec f = FieldSpec::rational()) {
  return quot({"x1", "x2", "x3", "x4"},
              {"x1^2*x2+x2^3-x1^3*x3", "x2^4-x1^4*x4"}, f);
}

struct GR {
  GradedAlgebra A;
  GenericReductionData G;
};

inline GR graded_of(const RingCtxPtr& R, int n_max = 0) {
  GR g;
  g.A = GradedAlgebra::from_ring(R);
  g.G = build_generic_data(g.A, n_max);
  return g;
}

struct NamedFixture {
  const char* name;
  RingCtxPtr (*make)(FieldSpec);
};

// every standard graded two-variable fixture (one parameter, d = 1)
inline std::vector<NamedFixture> graded_fixtures() {
  return {{"saturation_gap", &ring_saturation_gap},
          {"two_strata_real", &ring_two_strata_real},
          {"two_strata_complex", &ring_two_strata_complex},
          {"contraction_gap", &ring_contraction_gap},
          {"cubic", &ring_cubic}};
}

inline std::vector<mpq_class> semigroup_weights() {
  return {mpq_class(3), mpq_class(4)};
}

// ---------------------------------------------------------------------------
// random generators (all deterministic through explicit engines)

inline Coeff small_coeff(std::mt19937_64& rng) {
  return Coeff((long)(rng() % 7) - 3);
}

inline Polynomial random_homog(const RingCtxPtr& R, int deg,
                               std::mt19937_64& rng) {
  int n = R->nvars();
  std::vector<Term> ts;
  if (n == 1) {
    ts.push_back(Term{Monomial::var(1, 0, deg), Coeff(1)});
    return Polynomial(R, ts);
  }
  for (int e1 = 0; e1 <= deg; ++e1) {
    Coeff c = small_coeff(rng);
    if (c == 0) continue;
    ts.push_back(
        Term{Monomial{std::vector<int32_t>{(int32_t)(deg - e1), (int32_t)e1}},
             c});
  }
  if (ts.empty())
    ts.push_back(Term{Monomial::var(2, 0, deg), Coeff(1)});
  return Polynomial(R, ts);
}

// ---------------------------------------------------------------------------
// property drivers (criterion-level batteries shared with the acceptance gate)

// Groebner membership against the degreewise linear-algebra oracle, plus the
// colon / intersection / saturation laws, on random homogeneous ideals in one
// or two variables.
inline bool gb_and_colon_laws(int trials, unsigned long seed,
                              std::string* why) {
  std::mt19937_64 rng(seed);
  RingCtxPtr R1 = RingContext::make({"x"}, FieldSpec::rational());
  RingCtxPtr R2 = RingContext::make({"x", "y"}, FieldSpec::rational());
  GradedAlgebra A1 = GradedAlgebra::from_ring(R1);
  GradedAlgebra A2 = GradedAlgebra::from_ring(R2);

  for (int trial = 0; trial < trials; ++trial) {
    bool one_var = trial % 5 == 4;
    const RingCtxPtr& R = one_var ? R1 : R2;
    const GradedAlgebra& A = one_var ? A1 : A2;

    int ngens = 1 + (int)(rng() % 2) + (one_var ? 0 : (int)(rng() % 2));
    std::vector<Polynomial> gens;
    for (int i = 0; i < ngens; ++i)
      gens.push_back(random_homog(R, 2 + (int)(rng() % 3), rng));
    Ideal I(R, gens);

    auto member = [&](const Polynomial& f) -> bool {
      if (f.is_zero()) return true;
      int n = (int)f.total_degree();
      auto rows = graded_piece_of_ideal(A, gens, n);
      return in_rowspace(A.coordinates(f, n), rows, A.hilbert(n), R->field);
    };
    auto fail = [&](const std::string& m) {
      if (why) *why = m + " (trial " + std::to_string(trial) + ")";
      return false;
    };

    for (int j = 0; j < 6; ++j) {
      Polynomial f = random_homog(R, 1 + (int)(rng() % 6), rng);
      if (I.contains(f) != member(f))
        return fail("membership disagrees with the degreewise oracle");
    }
    // certified members: monomial combinations of the generators
    for (int j = 0; j < 3; ++j) {
      const Polynomial& g = gens[rng() % gens.size()];
      Polynomial m(R, {Term{Monomial::var(R->nvars(), (int)(rng() % R->nvars()),
                                          1 + (int)(rng() % 3)),
                            Coeff(1)}});
      Polynomial f = m * g;
      if (!I.contains(f) || !member(f))
        return fail("a generator multiple escaped membership");
    }

    Polynomial g = random_homog(R, 1 + (int)(rng() % 2), rng);
    Ideal C = colon(I, Ideal::principal(g));
    for (int j = 0; j < 4; ++j) {
      Polynomial h = random_homog(R, 1 + (int)(rng() % 4), rng);
      if (C.contains(h) != member(h * g))
        return fail("colon disagrees with the multiply-then-test oracle");
    }

    std::vector<Polynomial> gens2;
    for (int i = 0; i < 2; ++i)
      gens2.push_back(random_homog(R, 2 + (int)(rng() % 2), rng));
    Ideal I2(R, gens2);
    Ideal T = intersect(I, I2);
    for (int j = 0; j < 4; ++j) {
      Polynomial h = random_homog(R, 2 + (int)(rng() % 4), rng);
      bool both = I.contains(h) && I2.contains(h);
      if (T.contains(h) != both)
        return fail("intersection disagrees with pairwise membership");
    }

    int steps = 0;
    Ideal S = saturate(I, Ideal::principal(g), &steps);
    if (!S.contains_ideal(I)) return fail("saturation lost the ideal");
    if (!ideal_equal(colon(S, Ideal::principal(g)), S))
      return fail("saturation is not colon-stable");
    Ideal back = product_ideal(S, power_ideal(Ideal::principal(g), steps));
    if (!I.contains_ideal(back))
      return fail("saturation times the reported power escapes the ideal");
  }
  return true;
}

// Determinantal ideals are untouched by invertible row/column operations.
inline bool fitting_invariance(int nops, unsigned long seed,
                               std::string* why) {
  GR g = graded_of(ring_saturation_gap());
  const RingCtxPtr& U = g.G.uring();
  PolyMat M = g.G.matrix(3);  // 3 x 4, entries linear in u1, u2
  int rows = (int)M.size(), cols = (int)M[0].size();
  int tmax = rows < cols ? rows : cols;
  std::vector<Ideal> base;
  for (int t = 1; t <= tmax; ++t) base.push_back(minors_ideal(M, t, U));

  std::mt19937_64 rng(seed);
  Polynomial u1 = pp(U, "u1"), u2 = pp(U, "u2");
  auto rand_poly = [&]() {
    // mostly constants, occasionally linear, to keep entry degrees tame
    long c = (long)(rng() % 5) - 2;
    if (c == 0) c = 1;
    Polynomial q(U, {Term{Monomial::one(U->nvars()), Coeff(c)}});
    if (rng() % 4 == 0) q = q + (rng() % 2 ? u1 : u2);
    return q;
  };
  for (int op = 1; op <= nops; ++op) {
    int kind = (int)(rng() % 3);
    bool on_rows = rng() % 2 == 0;
    int dim = on_rows ? rows : cols;
    int i = (int)(rng() % dim), j = (int)(rng() % dim);
    if (i == j) j = (j + 1) % dim;
    if (dim == 1) kind = 1;
    if (kind == 0) {  // swap
      for (int k = 0; k < (on_rows ? cols : rows); ++k) {
        if (on_rows) std::swap(M[i][k], M[j][k]);
        else std::swap(M[k][i], M[k][j]);
      }
    } else if (kind == 1) {  // unit scale
      long c = rng() % 2 ? 2 : -1;
      for (int k = 0; k < (on_rows ? cols : rows); ++k) {
        Polynomial& e = on_rows ? M[i][k] : M[k][i];
        e = e * Polynomial(U, {Term{Monomial::one(U->nvars()), Coeff(c)}});
      }
    } else {  // add a polynomial multiple of another line
      Polynomial q = rand_poly();
      for (int k = 0; k < (on_rows ? cols : rows); ++k) {
        if (on_rows) M[i][k] = M[i][k] + q * M[j][k];
        else M[k][i] = M[k][i] + q * M[k][j];
      }
    }
    if (op % 25 == 0 || op == nops) {
      for (int t = 1; t <= tmax; ++t) {
        if (!ideal_equal(minors_ideal(M, t, U), base[t - 1])) {
          if (why)
            *why = "minor ideal of size " + std::to_string(t) +
                   " changed after " + std::to_string(op) + " operations";
          return false;
        }
      }
    }
  }
  return true;
}

// The k(u)-rank bounds every specialization and the bound is sharp exactly
// off the top determinantal locus.
inline bool rank_property(int trials, unsigned long seed, std::string* why) {
  std::mt19937_64 rng(seed);
  RingCtxPtr U = RingContext::make({"u1", "u2"}, FieldSpec::rational());
  Polynomial u1 = pp(U, "u1"), u2 = pp(U, "u2");
  for (int trial = 0; trial < trials; ++trial) {
    int rows = 2 + (int)(rng() % 3), cols = 2 + (int)(rng() % 4);
    PolyMat M(rows, std::vector<Polynomial>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Polynomial e(U, {Term{Monomial::one(2), small_coeff(rng)}});
        e = e + Polynomial(U, {Term{Monomial::var(2, 0), small_coeff(rng)}});
        e = e + Polynomial(U, {Term{Monomial::var(2, 1), small_coeff(rng)}});
        M[i][j] = e;
      }
    int t = rank_poly(M);
    auto fail = [&](const std::string& m) {
      if (why) *why = m + " (trial " + std::to_string(trial) + ")";
      return false;
    };
    Ideal top = minors_ideal(M, t, U);
    if (top.is_zero()) return fail("the rank-sized minors all vanish");
    if (!minors_ideal(M, t + 1, U).is_zero())
      return fail("minors above the rank survive");
    for (int s = 0; s < 5; ++s) {
      std::vector<Coeff> alpha = {Coeff((long)(rng() % 11) - 5),
                                  Coeff((long)(rng() % 11) - 5)};
      KMat K = eval_poly_matrix(M, alpha);
      int rk = rank(K);
      if (rk > t) return fail("a specialization exceeded the generic rank");
      std::map<int, Coeff> at = {{0, alpha[0]}, {1, alpha[1]}};
      bool off_locus = false;
      for (const Polynomial& m : top.gens())
        if (!m.evaluate(at).is_zero()) off_locus = true;
      if (off_locus != (rk == t))
        return fail("rank drop disagrees with the determinantal locus");
    }
  }
  return true;
}

// Sandwich inclusions and the power containment on every graded fixture.
inline bool sandwich_and_power(std::string* why) {
  for (const NamedFixture& fx : graded_fixtures()) {
    RingCtxPtr R = fx.make(FieldSpec::rational());
    GR g = graded_of(R);
    CoreReport t16 = core_theorem16(g.G);
    CoreReport sat = core_saturation(g.G);
    CoreReport con = core_generic_contraction(g.G);
    auto fail = [&](const std::string& m) {
      if (why) *why = std::string(fx.name) + ": " + m;
      return false;
    };
    if (!t16.result.contains_ideal(sat.result))
      return fail("saturation escapes the stratified value");
    if (!con.result.contains_ideal(t16.result))
      return fail("stratified value escapes the generic contraction");
    if (!t16.result.contains_ideal(power_ideal(var_ideal(R), t16.r + 1)))
      return fail("the top power of the variable ideal escapes");
    if (t16.verdict != "core") return fail("stratified verdict: " + t16.verdict);
  }
  return true;
}

// Exhaustive partition of the reduction points of P^1(F_p) by their rank
// vectors: each accepted point realizes exactly one admissible sequence.
// When expect_all_realized every sequence must be hit; otherwise at least
// one must be missed (strata cut out by forms that do not split mod p).
inline bool partition_exhaustive(RingCtxPtr (*mk)(FieldSpec), long p,
                                 std::string* why,
                                 bool expect_all_realized = true) {
  RingCtxPtr R = mk(FieldSpec::prime_field(p));
  GR g = graded_of(R);
  int r = big_reduction_number(g.G);
  std::vector<AdmissibleSequence> S = admissible_sequences(g.G);
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  for (size_t i = 0; i < S.size(); ++i)
    for (size_t j = i + 1; j < S.size(); ++j)
      if (S[i].a == S[j].a) return fail("duplicate admissible sequences");

  std::vector<int> counts(S.size(), 0);
  int accepted = 0;
  for (const std::vector<Coeff>& alpha : projective_points(g.G.ngens(), p)) {
    if (!is_minimal_reduction(g.G, {alpha})) continue;
    ++accepted;
    std::vector<int> v;
    for (int n = 1; n <= r; ++n)
      v.push_back(rank(eval_poly_matrix(g.G.matrix(n), alpha)));
    int hits = 0;
    size_t which = 0;
    for (size_t s = 0; s < S.size(); ++s)
      if (S[s].a == v) {
        ++hits;
        which = s;
      }
    if (hits != 1)
      return fail("a reduction point realized " + std::to_string(hits) +
                  " admissible sequences");
    ++counts[which];
  }
  if (accepted == 0) return fail("no reduction points at all");
  int total = 0, missed = 0;
  for (size_t s = 0; s < S.size(); ++s) {
    if (counts[s] == 0) ++missed;
    total += counts[s];
  }
  if (total != accepted) return fail("partition counts do not add up");
  if (expect_all_realized && missed > 0)
    return fail("an admissible sequence is realized by no point");
  if (!expect_all_realized && missed == 0)
    return fail("expected an unrealized sequence over F_" + std::to_string(p));
  return true;
}

// Intersection of sampled principal reductions of the weighted semigroup
// maximal ideal over F_p against the conductor-formula value reduced mod p.
inline bool semigroup_prime_oracle(long p, int samples, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  RingCtxPtr Rq = ring_semigroup();
  LocalIdealContext Lq =
      make_local_context(Rq, idl(Rq, {"X", "Y"}), semigroup_weights());
  CoreReport rep = core_onedim_conductor(Lq, pp(Rq, "X"));
  if (rep.verdict != "core") return fail("rational conductor verdict: " + rep.verdict);

  RingCtxPtr Rp = ring_semigroup(FieldSpec::prime_field(p));
  Ideal target = reduce_ideal_mod_p(rep.result, Rp);
  LocalIdealContext Lp =
      make_local_context(Rp, idl(Rp, {"X", "Y"}), semigroup_weights());
  Ideal acc;
  int used = 0;
  for (long b = 0; b < p && used < samples; ++b) {
    Polynomial q = pp(Rp, "X") + Polynomial(Rp, {Term{Monomial::var(2, 1),
                                                      Coeff(b)}});
    Ideal J = Ideal::principal(q);
    try {
      reduction_number_ideal(Lp, J);
    } catch (const NotAReduction&) {
      continue;
    }
    acc = used == 0 ? J : intersect(acc, J);
    ++used;
  }
  if (used < samples) return fail("not enough reductions accepted");
  if (!local_contains_ideal(acc, target))
    return fail("the sampled intersection lost the formula value");
  if (!local_ideal_equal(acc, target))
    return fail("the sampled intersection is strictly larger mod " +
                std::to_string(p));
  return true;
}

}  // namespace testsupport
