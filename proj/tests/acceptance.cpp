// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Every golden here was cross-checked against an independent oracle
// (exhaustive prime-field enumeration, rational point sampling, or the
// degreewise linear-algebra membership test) before being frozen.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace idealcore;
using namespace testsupport;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, std::function<void()> body) {
  try {
    body();
    std::cout << "[PASS] criterion " << n << ": " << what << "\n";
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "[FAIL] criterion " << n << ": " << what << " -- " << e.what()
              << "\n";
  }
}

struct CheckFail : std::runtime_error {
  explicit CheckFail(const std::string& m) : std::runtime_error(m) {}
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFail(what);
}

Ideal want(const RingCtxPtr& R, const std::vector<std::string>& gens) {
  return idl(R, gens);
}

std::vector<std::vector<int>> stratum_vectors(
    const std::vector<AdmissibleSequence>& S) {
  std::vector<std::vector<int>> v;
  for (const auto& s : S) v.push_back(s.a);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

int main() {
  criterion(1,
            "stratified formula separates from the single saturation on the "
            "two-stratum monomial algebra",
            [] {
              RingCtxPtr R = ring_saturation_gap();
              GR g = graded_of(R);
              require(big_reduction_number(g.G) == 4, "r != 4");
              require(ideal_equal(g.G.J(),
                                  want(g.G.uring(), {"u1^3", "u1^2*u2"})),
                      "final minor ideal");
              CoreReport t16 = core_theorem16(g.G);
              require(stratum_vectors(t16.strata) ==
                          std::vector<std::vector<int>>{{1, 2, 3, 3},
                                                        {1, 2, 3, 4}},
                      "stratum list");
              require(ideal_equal(t16.result,
                                  want(R, {"x1^4", "x1^3*x2", "x1*x2^3"})),
                      "stratified value");
              CoreReport sat = core_saturation(g.G);
              require(ideal_equal(sat.result,
                                  want(R, {"x1^4", "x1^3*x2", "x1*x2^4"})),
                      "saturation value");
              require(!ideal_equal(sat.result, t16.result),
                      "the two must differ");
            });

  criterion(2,
            "rational point sampling stays strictly above the closed formula "
            "on the sign-split pair",
            [] {
              RingCtxPtr R = ring_two_strata_real();
              GR g = graded_of(R);
              require(big_reduction_number(g.G) == 4, "r != 4");
              require(ideal_equal(g.G.J(), want(g.G.uring(),
                                                {"u1^3", "u1^2*u2",
                                                 "u1*u2^2"})),
                      "final minor ideal");
              CoreReport t16 = core_theorem16(g.G);
              require(stratum_vectors(t16.strata) ==
                          std::vector<std::vector<int>>{{1, 2, 3, 3},
                                                        {1, 2, 3, 4}},
                      "stratum list");
              Ideal formula = want(R, {"x1^4 + x1^2*x2^2", "x1^2*x2^3",
                                       "x1*x2^4"});
              require(ideal_equal(t16.result, formula), "stratified value");
              SamplingPlan plan;
              plan.exhaustive = false;
              plan.count = 50;
              plan.seed = 1;
              CoreReport bf = core_bruteforce(g.G, plan);
              require(ideal_equal(bf.result, want(R, {"x1^4", "x1^3*x2",
                                                      "x1^2*x2^2"})),
                      "sampled rational value");
              require(bf.result.contains_ideal(t16.result),
                      "sampling must stay above the formula");
              require(!ideal_equal(bf.result, t16.result),
                      "the gap must be strict");
            });

  criterion(3,
            "point semantics shrink with the field while the closed formula "
            "matches every exhaustive prime run whose strata have points",
            [] {
              GR gq = graded_of(ring_two_strata_complex());
              require(big_reduction_number(gq.G, Semantics::RationalPoints) ==
                          2,
                      "rational-points r != 2");
              require(big_reduction_number(gq.G) == 3, "geometric r != 3");
              require(ideal_equal(gq.G.J(),
                                  want(gq.G.uring(), {"u1^2", "u1*u2"})),
                      "final minor ideal");
              CoreReport t16 = core_theorem16(gq.G);
              require(stratum_vectors(t16.strata) ==
                          std::vector<std::vector<int>>{{1, 2, 2}, {1, 2, 3}},
                      "stratum list");
              require(ideal_equal(t16.result,
                                  want(gq.A.ring(),
                                       {"x1^3 + x1*x2^2", "x1*x2^3"})),
                      "stratified value");
              SamplingPlan rat;
              rat.exhaustive = false;
              rat.count = 50;
              rat.seed = 1;
              CoreReport bf_q = core_bruteforce(gq.G, rat);
              require(ideal_equal(bf_q.result,
                                  power_ideal(var_ideal(gq.A.ring()), 3)),
                      "rational sampling must give the cube");
              SamplingPlan ex;
              RingCtxPtr R13 = ring_two_strata_complex(
                  FieldSpec::prime_field(13));
              GR g13 = graded_of(R13);
              CoreReport bf13 = core_bruteforce(g13.G, ex);
              require(bf13.oracle_agreement && *bf13.oracle_agreement,
                      "mod 13 oracle must agree");
              require(ideal_equal(bf13.result,
                                  reduce_ideal_mod_p(t16.result, R13)),
                      "mod 13 value");
              RingCtxPtr R7 = ring_two_strata_complex(
                  FieldSpec::prime_field(7));
              GR g7 = graded_of(R7);
              CoreReport bf7 = core_bruteforce(g7.G, ex);
              require(bf7.oracle_agreement && !*bf7.oracle_agreement,
                      "mod 7 oracle must disagree");
              require(ideal_equal(bf7.result,
                                  power_ideal(var_ideal(R7), 3)),
                      "mod 7 value");
            });

  criterion(4,
            "generic contraction overshoots with an explicit non-member "
            "witness",
            [] {
              RingCtxPtr R = ring_contraction_gap();
              GR g = graded_of(R);
              CoreReport con = core_generic_contraction(g.G);
              require(ideal_equal(con.result, want(R, {"x1^2", "x2^2"})),
                      "contraction value");
              SamplingPlan plan;
              plan.exhaustive = false;
              plan.count = 50;
              plan.seed = 1;
              CoreReport bf = core_bruteforce(g.G, plan);
              require(!bf.result.contains(pp(R, "x2^2")),
                      "x2^2 must fail sampled membership");
              CoreReport t16 = core_theorem16(g.G);
              require(con.result.contains_ideal(t16.result),
                      "upper bound inclusion");
              require(con.result.contains(pp(R, "x2^2")) &&
                          !t16.result.contains(pp(R, "x2^2")),
                      "the witness separates the two");
            });

  criterion(5,
            "local colon chain brackets the core and is strict at the last "
            "step",
            [] {
              RingCtxPtr R = ring_saturation_gap();
              LocalIdealContext L =
                  make_local_context(R, var_ideal(R), std::nullopt);
              ColonChain ch = colon_chain(L);
              require(ch.r == 4, "chain r != 4");
              require(ch.chain_ok, "chain inclusions");
              Ideal sat_value = want(R, {"x1^4", "x1^3*x2", "x1*x2^4"});
              require(ideal_equal(ch.outer, sat_value), "outer member");
              require(ideal_equal(ch.inner, sat_value) &&
                          ideal_equal(ch.middle, sat_value),
                      "inner members");
              bool minor_note = false;
              for (const std::string& n : ch.notes)
                if (n.find("u1^3") != std::string::npos) minor_note = true;
              require(minor_note, "generic minor ideal note");
              GR g = graded_of(R);
              Ideal core = core_theorem16(g.G).result;
              require(core.contains_ideal(ch.outer), "outer inside the core");
              require(!ideal_equal(core, ch.outer),
                      "last inclusion must be strict");
            });

  criterion(6,
            "special fiber of the flat family is presented exactly and "
            "carries the same reduction number",
            [] {
              RingCtxPtr R = ring_four_vars();
              LocalIdealContext L = make_local_context(
                  R, idl(R, {"x1", "x2"}),
                  std::vector<mpq_class>{1, 1, 0, 0});
              FiberRing F = fiber_ring(L);
              require(F.graded, "fiber must be standard graded");
              require(ideal_equal(Ideal(F.tring, F.relations),
                                  want(F.tring,
                                       {"T1^2*T2 + T2^3", "T2^4"})),
                      "fiber presentation");
              int r_base = reduction_number_ideal(L, idl(R, {"x1"}));
              int r_fiber =
                  reduction_number_graded(F.algebra, {pp(F.tring, "T1")});
              require(r_base == 2 && r_fiber == 2,
                      "reduction numbers must both be 2");
            });

  criterion(7,
            "one-dimensional conductor suite on the numerical semigroup "
            "ring",
            [] {
              RingCtxPtr R = ring_semigroup();
              Ideal I = idl(R, {"X", "Y"});
              LocalIdealContext L =
                  make_local_context(R, I, semigroup_weights());
              Polynomial x = pp(R, "X");
              int r = reduction_number_ideal(L, Ideal::principal(x));
              require(r == 2, "r != 2");
              Ideal K = colon(power_ideal(Ideal::principal(x), r),
                              power_ideal(I, r));
              require(local_ideal_equal(K, want(R, {"X^2", "X*Y", "Y^2"})),
                      "conductor value");
              CoreReport od = core_onedim_conductor(L, x);
              Ideal m3 = want(R, {"X^3", "X^2*Y", "X*Y^2"});
              require(od.verdict == "core" &&
                          local_ideal_equal(od.result, m3),
                      "conductor route");
              require(local_ideal_equal(
                          od.result, product_ideal(Ideal::principal(x), K)) &&
                          local_ideal_equal(od.result, product_ideal(I, K)) &&
                          local_ideal_equal(
                              od.result,
                              colon(power_ideal(Ideal::principal(x), r + 1),
                                    power_ideal(I, r))),
                      "the four colon identities");
              for (const char* j : {"X", "X + Y", "X + 2*Y"}) {
                CoreReport eq = core_equimultiple(L, idl(R, {j}));
                require(local_ideal_equal(eq.result, m3),
                        std::string("independence at ") + j);
              }
              std::string why;
              require(semigroup_prime_oracle(101, 30, &why), why);
            });

  criterion(8,
            "depth obstruction is reported instead of a wrong core",
            [] {
              RingCtxPtr D = ring_depth_guard();
              LocalIdealContext L =
                  make_local_context(D, var_ideal(D), std::nullopt);
              CoreReport rep = core_onedim_conductor(L, pp(D, "x1"));
              require(rep.verdict == "not the core (depth check failed)",
                      "verdict string");
              require(local_ideal_equal(rep.result, idl(D, {"x1", "x2"})),
                      "colon value");
              require(!local_contains(idl(D, {"x1"}), pp(D, "x2")),
                      "x2 escapes the principal reduction");
              bool witness = false;
              for (const std::string& n : rep.notes)
                if (n.find("witness") != std::string::npos) witness = true;
              require(witness, "witness note");
            });

  criterion(9,
            "property batteries: Groebner laws, Fitting invariance, generic "
            "rank, sandwich bounds, point partition",
            [] {
              std::string why;
              require(gb_and_colon_laws(100, 20260815, &why), why);
              require(fitting_invariance(100, 4242, &why), why);
              require(rank_property(50, 917, &why), why);
              require(sandwich_and_power(&why), why);
              require(partition_exhaustive(&ring_two_strata_complex, 101,
                                           &why),
                      why);
              require(partition_exhaustive(&ring_saturation_gap, 101, &why),
                      why);
            });

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
