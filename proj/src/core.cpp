#include "idealcore/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "idealcore/errors.hpp"

namespace idealcore {

namespace {

std::string seq_desc(const std::vector<int>& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i)
    s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

std::string gens_desc(const Ideal& I) {
  std::string s;
  for (const Polynomial& g : I.gens()) s += (s.empty() ? "" : ", ") + g.str();
  return "(" + (s.empty() ? "0" : s) + ")";
}

Ideal transported(const Ideal& I, const RingCtxPtr& to) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens())
    gens.push_back(transport_by_name(g, to));
  return Ideal(to, std::move(gens));
}

Ideal variable_ideal(const RingCtxPtr& ring) {
  std::vector<Polynomial> v;
  for (int i = 0; i < ring->nvars(); ++i)
    v.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(v));
}

std::vector<std::vector<Coeff>> identity_rows(int h) {
  std::vector<std::vector<Coeff>> rows(h, std::vector<Coeff>(h, Coeff(0)));
  for (int i = 0; i < h; ++i) rows[i][i] = Coeff(1);
  return rows;
}

int ensure_r(const GenericReductionData& G) {
  if (G.r() >= 0) return G.r();
  return big_reduction_number(G);
}

}  // namespace

std::vector<AdmissibleSequence> admissible_sequences(
    const GenericReductionData& G) {
  int r = ensure_r(G);
  std::vector<int> ranks;
  for (int n = 1; n <= r; ++n) ranks.push_back(G.generic_rank(n));

  std::vector<AdmissibleSequence> out;
  std::vector<int> a(r, 0);
  while (true) {
    Ideal num = Ideal::zero(G.uring());
    Ideal den = G.J();
    for (int n = 1; n <= r; ++n) {
      Ideal up = G.det_ideal(n, a[n - 1] + 1);
      if (!up.is_zero()) num = sum_ideal(num, up);
      if (a[n - 1] > 0) den = product_ideal(den, G.det_ideal(n, a[n - 1]));
    }
    den = Ideal(G.uring(), trim_generators(den.gens()));
    bool nonempty = false;
    for (const Polynomial& g : den.gens())
      if (!in_radical(g, num)) {
        nonempty = true;
        break;
      }
    if (nonempty) out.push_back({a, num, den});

    int i = r - 1;
    while (i >= 0 && a[i] == ranks[i]) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

CoreReport core_theorem16(const GenericReductionData& G) {
  CoreReport rep;
  rep.method = "theorem16";
  rep.field_semantics = Semantics::AlgClosed;
  const GradedAlgebra& A = G.algebra();
  const RingCtxPtr& ring = A.ring();
  int r = ensure_r(G);
  rep.r = r;
  rep.hilbert = A.hilbert_vector(r + 1);
  rep.strata = admissible_sequences(G);

  GenericExtension E = extend_by_generic_forms(ring, G);
  Ideal Q(E.ext, E.forms);
  Ideal Jext = transported(G.J(), E.ext);

  // radicals of the stepped minor ideals, shared across strata
  std::map<std::pair<int, int>, Ideal> rad;
  auto radical_summand = [&](int n, int t) -> const Ideal& {
    auto key = std::make_pair(n, t);
    auto it = rad.find(key);
    if (it != rad.end()) return it->second;
    Ideal rt = radical_restricted(G.det_ideal(n, t));
    return rad.emplace(key, transported(rt, E.ext)).first->second;
  };

  std::vector<Ideal> vals;
  for (const AdmissibleSequence& S : rep.strata) {
    try {
      Ideal num = Q;
      for (int n = 1; n <= r; ++n) {
        int t = S.a[n - 1] + 1;
        if (G.det_ideal(n, t).is_zero()) continue;
        num = sum_ideal(num, radical_summand(n, t));
      }
      Ideal cur = colon(num, Jext);
      for (int n = 1; n <= r; ++n)
        if (S.a[n - 1] > 0)
          cur = colon(cur, transported(G.det_ideal(n, S.a[n - 1]), E.ext));
      vals.push_back(contract_generic(cur, ring, G.uring()));
    } catch (const NotImplementedClass& e) {
      throw NotImplementedClass(
          "stratified formula stalled on stratum " + seq_desc(S.a), e.what());
    }
  }
  Ideal meet = intersect_all(vals, ring);
  rep.result = Ideal(ring, trim_generators(meet.gens()));

  rep.notes.push_back(std::to_string(rep.strata.size()) +
                      " admissible sequence(s)");
  Ideal mpow = power_ideal(variable_ideal(ring), r + 1);
  if (rep.result.contains_ideal(mpow)) {
    rep.verdict = "core";
  } else {
    rep.verdict = "INVALID: misses the (r+1)-st power of the variable ideal";
  }
  if (ring->field.is_prime_field())
    rep.notes.push_back(
        "prime-field arithmetic: strata are read over the algebraic closure "
        "of F_p");
  return rep;
}

CoreReport core_saturation(const GenericReductionData& G) {
  CoreReport rep;
  rep.method = "saturation";
  rep.field_semantics = Semantics::AlgClosed;
  const GradedAlgebra& A = G.algebra();
  const RingCtxPtr& ring = A.ring();
  int r = ensure_r(G);
  rep.r = r;
  rep.hilbert = A.hilbert_vector(r + 1);

  GenericExtension E = extend_by_generic_forms(ring, G);
  Ideal Q(E.ext, E.forms);
  Ideal Jext = transported(G.J(), E.ext);
  rep.result = contract_generic(saturate(Q, Jext), ring, G.uring());

  size_t count = admissible_sequences(G).size();
  rep.notes.push_back(std::to_string(count) + " admissible sequence(s)");

  // sufficient one-sided check: J inside the radical of every generic minor
  // ideal forces the generic stratum to be the only one
  bool trapped = true;
  for (int n = 1; n <= r && trapped; ++n) {
    Ideal dn = G.det_ideal(n, G.generic_rank(n));
    for (const Polynomial& g : G.J().gens())
      if (!in_radical(g, dn)) {
        trapped = false;
        break;
      }
  }
  if (trapped)
    rep.notes.push_back(
        "every generic minor ideal traps J: single stratum guaranteed");
  rep.verdict = count == 1 ? "core"
                           : "lower bound (non-generic strata are present)";
  return rep;
}

CoreReport core_generic_contraction(const GenericReductionData& G) {
  CoreReport rep;
  rep.method = "generic_contraction";
  rep.field_semantics = Semantics::AlgClosed;
  const GradedAlgebra& A = G.algebra();
  const RingCtxPtr& ring = A.ring();
  FieldSpec f = ring->field;
  int r = ensure_r(G);
  rep.r = r;
  rep.hilbert = A.hilbert_vector(r + 1);

  // degree n piece: constants orthogonal to the k(u)-kernel of M_n
  std::vector<std::vector<std::vector<Coeff>>> pieces(r + 2);
  for (int n = 1; n <= r + 1; ++n) {
    int h = A.hilbert(n);
    auto ker = nullspace_poly(G.matrix(n));
    if (ker.empty()) {
      pieces[n] = identity_rows(h);
      continue;
    }
    std::vector<std::vector<Coeff>> cond;
    for (const auto& w : ker) {
      std::map<std::vector<int32_t>, std::vector<Coeff>> bymono;
      for (int b = 0; b < h; ++b)
        for (const Term& t : w[b].terms()) {
          auto& row = bymono[t.m.e];
          if (row.empty()) row.assign(h, Coeff(0));
          row[b] = f.add(row[b], t.c);
        }
      for (auto& kv : bymono) cond.push_back(std::move(kv.second));
    }
    pieces[n] = kernel_basis(KMat::from_rows(cond, h, f));
  }

  rep.result = Ideal(ring, assemble_graded_ideal(A, pieces));
  rep.verdict = "upper bound (contraction from the generic fiber)";
  return rep;
}

namespace {

// integer vectors with max-norm exactly H, first nonzero entry positive,
// content one: projective rational points enumerated by height
void height_points(int dm, int H, std::vector<std::vector<Coeff>>& out) {
  std::vector<long> v(dm, -H);
  while (true) {
    long maxabs = 0, gcd = 0;
    long lead = 0;
    for (long c : v) {
      maxabs = std::max(maxabs, std::abs(c));
      gcd = std::gcd(gcd, std::abs(c));
      if (lead == 0) lead = c;
    }
    if (maxabs == H && gcd == 1 && lead > 0) {
      std::vector<Coeff> pt;
      for (long c : v) pt.push_back(Coeff(c));
      out.push_back(std::move(pt));
    }
    int i = dm - 1;
    while (i >= 0 && v[i] == H) v[i--] = -H;
    if (i < 0) break;
    ++v[i];
  }
}

}  // namespace

CoreReport core_bruteforce(const GenericReductionData& G,
                           const SamplingPlan& plan) {
  CoreReport rep;
  rep.method = "bruteforce";
  const GradedAlgebra& A = G.algebra();
  const RingCtxPtr& ring = A.ring();
  FieldSpec f = ring->field;
  int r = ensure_r(G);
  rep.r = r;
  rep.hilbert = A.hilbert_vector(r + 1);
  rep.seed = plan.seed;
  int dm = G.uring()->nvars();
  int h_top = A.hilbert(r + 1);

  std::vector<std::vector<std::vector<Coeff>>> acc(r + 2);
  for (int n = 1; n <= r + 1; ++n) acc[n] = identity_rows(A.hilbert(n));

  long scanned = 0, used = 0;
  auto dims = [&] {
    size_t s = 0;
    for (int n = 1; n <= r; ++n) s += acc[n].size();
    return s;
  };
  auto absorb = [&](const std::vector<Coeff>& alpha) {
    ++scanned;
    if (rank(eval_poly_matrix(G.matrix(r + 1), alpha)) != h_top) return false;
    ++used;
    for (int n = 1; n <= r; ++n)
      acc[n] = intersect_rowspaces(
          acc[n], rowspace_basis(eval_poly_matrix(G.matrix(n), alpha)),
          A.hilbert(n), f);
    return true;
  };

  if (plan.exhaustive) {
    if (!f.is_prime_field())
      throw ContextError("exhaustive sampling needs a prime field");
    rep.field_semantics = Semantics::PrimeFieldPoints;
    rep.sampling = "exhaustive";
    for (const auto& pt : projective_points(dm, f.modulus)) absorb(pt);
  } else if (!f.is_prime_field()) {
    // deterministic small-height rational points; the seed plays no role
    rep.field_semantics = Semantics::RationalPoints;
    rep.sampling = "random:" + std::to_string(plan.count);
    int streak = 0;
    bool settled = false;
    for (int H = 1; H <= 60 && !settled; ++H) {
      std::vector<std::vector<Coeff>> pts;
      height_points(dm, H, pts);
      for (const auto& pt : pts) {
        size_t before = dims();
        if (!absorb(pt)) continue;
        if (used <= plan.count) continue;  // still collecting
        streak = dims() == before ? streak + 1 : 0;
        if (streak >= 10) {
          settled = true;
          break;
        }
      }
    }
    if (!settled)
      throw InconclusiveStabilization(
          "sampled intersection kept moving through height 60");
    rep.notes.push_back("rational points enumerated by height");
  } else {
    rep.field_semantics = Semantics::PrimeFieldPoints;
    rep.sampling = "random:" + std::to_string(plan.count);
    std::mt19937_64 rng(plan.seed);
    std::uniform_int_distribution<long> pick(0, f.modulus - 1);
    int streak = 0;
    bool settled = false;
    for (long tries = 0; tries < 100000 && !settled; ++tries) {
      std::vector<Coeff> pt(dm);
      bool allzero = true;
      for (int i = 0; i < dm; ++i) {
        long c = pick(rng);
        pt[i] = Coeff(c);
        allzero = allzero && c == 0;
      }
      if (allzero) continue;
      size_t before = dims();
      if (!absorb(pt)) continue;
      if (used <= plan.count) continue;
      streak = dims() == before ? streak + 1 : 0;
      if (streak >= 10) settled = true;
    }
    if (!settled)
      throw InconclusiveStabilization(
          "sampled intersection did not hold still for 10 extra points");
  }
  if (used == 0) throw ContextError("no reductions among the sampled points");

  rep.result = Ideal(ring, assemble_graded_ideal(A, acc));
  rep.notes.push_back("points=" + std::to_string(scanned) +
                      ", reductions=" + std::to_string(used));

  if (plan.exhaustive) {
    // the stratified formula over the same prime field doubles as an oracle
    // whenever its strata split there
    try {
      CoreReport formula = core_theorem16(G);
      rep.oracle_agreement = ideal_equal(formula.result, rep.result);
      rep.notes.push_back(
          "compared against the stratified formula over the same field");
    } catch (const NotImplementedClass&) {
    } catch (const InconclusiveStabilization&) {
    }
  }
  rep.verdict = "intersection of the sampled reductions";
  return rep;
}

KMat core_module_pieces(const ModulePresentation& E, const Ideal& J) {
  return constants_in_submodule(E.ctx, E.h, jacobson_intersection(E, J));
}

Ideal reduce_ideal_mod_p(const Ideal& I, const RingCtxPtr& target) {
  if (!target->field.is_prime_field())
    throw ContextError("reduction target must be a prime field ring");
  const RingCtxPtr& src = I.ctx();
  std::vector<int> remap(src->nvars());
  for (int k = 0; k < src->nvars(); ++k) {
    remap[k] = target->var_index(src->vars[k]);
    if (remap[k] < 0)
      throw ContextError("target ring lacks variable " + src->vars[k]);
  }

  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.reduced_generators()) {
    std::vector<Term> ts;
    for (const Term& t : g.terms()) {
      Monomial m = Monomial::one(target->nvars());
      for (int k = 0; k < src->nvars(); ++k) m.e[remap[k]] = t.m.e[k];
      ts.push_back({std::move(m), target->field.reduce(t.c)});
    }
    gens.push_back(Polynomial(target, std::move(ts)));
  }
  return Ideal(target, trim_generators(std::move(gens)));
}

namespace {

// Depth probe: a nonzerodivisor among the generators of I and their small
// pairwise combinations. For one-dimensional rings existence is exactly the
// Cohen-Macaulay condition.
std::optional<Polynomial> find_nonzerodivisor(const LocalIdealContext& L) {
  const RingCtxPtr& ring = L.ring;
  std::vector<Polynomial> cand = L.I.gens();
  size_t ng = cand.size();
  for (size_t i = 0; i < ng; ++i)
    for (size_t j = 0; j < ng; ++j) {
      if (i == j) continue;
      for (int c = 1; c <= 2; ++c)
        cand.push_back(L.I.gens()[i] +
                       Polynomial::constant(ring, Coeff(c)) * L.I.gens()[j]);
    }
  Ideal zero = Ideal::zero(ring);
  for (const Polynomial& c : cand) {
    if (c.is_zero() || zero.contains(c)) continue;
    if (colon(zero, Ideal::principal(c)).is_zero()) return c;
  }
  return std::nullopt;
}

void charp_caveat(CoreReport& rep, const RingCtxPtr& ring, int r,
                  const Ideal& I) {
  if (!ring->field.is_prime_field()) return;
  long bound = 0;
  for (const Polynomial& g : I.gens())
    bound = std::max(bound, g.total_degree());
  bound *= r;
  if (ring->field.modulus > bound)
    rep.notes.push_back(
        "prime characteristic: supporting theory assumes characteristic "
        "zero; p exceeds r times the generator degree bound");
  else
    rep.verdict = "suspect (characteristic too small for the power trick)";
}

}  // namespace

CoreReport core_onedim_conductor(const LocalIdealContext& L,
                                 const Polynomial& x) {
  const RingCtxPtr& ring = L.ring;
  CoreReport rep;
  rep.method = "onedim_conductor";
  rep.field_semantics = Semantics::AlgClosed;

  if (quotient_dimension(Ideal::zero(ring)) != 1)
    throw ContextError("principal-reduction path needs a one-dimensional ring");
  Polynomial xr = transport_by_name(x, ring);
  if (!local_contains(L.I, xr))
    throw ContextError("the candidate reduction element must lie in I");
  Ideal X = Ideal::principal(xr);

  int r = reduction_number_ideal(L, X);  // NotAReduction propagates
  rep.r = r;

  auto nzd = find_nonzerodivisor(L);
  if (!nzd) {
    Ideal val = colon(power_ideal(X, r + 1), power_ideal(L.I, r));
    rep.result = Ideal(ring, trim_generators(val.gens()));
    rep.verdict = "not the core (depth check failed)";
    rep.notes.push_back("no nonzerodivisor among the candidate combinations");
    for (const Polynomial& g : rep.result.gens())
      if (!local_contains(X, g)) {
        rep.notes.push_back("witness: " + g.str() +
                            " lies in the colon value but escapes the "
                            "principal reduction");
        break;
      }
    return rep;
  }

  Ideal K = colon(power_ideal(X, r), power_ideal(L.I, r));
  Ideal xK = product_ideal(X, K);
  rep.result = Ideal(ring, trim_generators(xK.gens()));
  rep.notes.push_back("nonzerodivisor witness: " + nzd->str());
  rep.notes.push_back("conductor colon = " + gens_desc(Ideal(
                          ring, trim_generators(K.gens()))));

  Ideal KI = product_ideal(K, L.I);
  Ideal top = colon(power_ideal(X, r + 1), power_ideal(L.I, r));
  bool consistent =
      local_ideal_equal(xK, KI) && local_ideal_equal(xK, top);
  rep.verdict = consistent
                    ? "core"
                    : "INCONSISTENT: conductor colon equalities failed";
  if (consistent)
    rep.notes.push_back("colon identities across the conductor verified");
  charp_caveat(rep, ring, r, L.I);
  return rep;
}

CoreReport core_equimultiple(const LocalIdealContext& L, const Ideal& J) {
  const RingCtxPtr& ring = L.ring;
  CoreReport rep;
  rep.method = "equimultiple_colon";
  rep.field_semantics = Semantics::AlgClosed;

  if (!local_contains_ideal(L.I, J))
    throw ContextError("J must sit inside I");
  int dimR = quotient_dimension(Ideal::zero(ring));
  int height = dimR - quotient_dimension(L.I);
  int sJ = (int)trim_generators(J.gens()).size();
  if (sJ != height)
    throw ContextError("the reduction must be generated by height-of-I "
                       "many elements (height " +
                       std::to_string(height) + ", got " +
                       std::to_string(sJ) + ")");

  auto nzd = find_nonzerodivisor(L);
  if (!nzd) {
    bool full = local_ideal_equal(L.I, variable_ideal(ring));
    if (full) {
      try {
        GradedAlgebra A = GradedAlgebra::from_ring(ring);
        GenericReductionData G = build_generic_data(A);
        CoreReport graded = core_theorem16(G);
        rep.result = transported(graded.result, ring);
        rep.r = graded.r;
        rep.hilbert = graded.hilbert;
        rep.notes.push_back(
            "depth check failed; value transported from the stratified "
            "graded formula");
        rep.verdict = graded.verdict;
        return rep;
      } catch (const ContextError&) {
      }
    }
    throw NotCohenMacaulay(
        "no nonzerodivisor among the candidate combinations");
  }

  int r = reduction_number_ideal(L, J);  // NotAReduction propagates
  rep.r = r;
  Ideal res = colon(power_ideal(J, r + 1), power_ideal(L.I, r));
  rep.result = Ideal(ring, trim_generators(res.gens()));
  rep.notes.push_back("nonzerodivisor witness: " + nzd->str());
  if (dimR >= 2)
    rep.notes.push_back("depth probed to level one only");

  // the colon value must not depend on which reduction was used
  std::vector<Polynomial> jg = trim_generators(J.gens());
  bool checked = false;
  for (size_t i = 0; i < jg.size() && !checked; ++i)
    for (const Polynomial& a : L.I.gens()) {
      if (local_contains(J, a)) continue;
      for (int c = 1; c <= 2 && !checked; ++c) {
        std::vector<Polynomial> alt = jg;
        alt[i] = jg[i] + Polynomial::constant(ring, Coeff(c)) * a;
        Ideal J2(ring, alt);
        if ((int)trim_generators(J2.gens()).size() != sJ) continue;
        if (local_ideal_equal(J2, J)) continue;
        int r2;
        try {
          r2 = reduction_number_ideal(L, J2);
        } catch (const NotAReduction&) {
          continue;
        }
        Ideal res2 = colon(power_ideal(J2, r2 + 1), power_ideal(L.I, r2));
        bool same = local_ideal_equal(res, res2);
        rep.notes.push_back("independence check against " +
                            gens_desc(J2) +
                            (same ? ": agrees" : ": DISAGREES"));
        rep.verdict = same ? "core"
                           : "INCONSISTENT: value depends on the reduction";
        checked = true;
      }
      if (checked) break;
    }
  if (!checked) {
    rep.notes.push_back("no second reduction found; independence unchecked");
    rep.verdict = "core";
  }
  charp_caveat(rep, ring, r, L.I);
  return rep;
}

}  // namespace idealcore
