#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idealcore/modulepres.hpp"
#include "idealcore/reduction.hpp"

namespace idealcore {

// An exponent vector (a_1..a_r) whose rank stratum is nonempty: some
// parameter point has rank M_n = a_n for every n while still giving a
// reduction. Nonemptiness is certified by a generator of `denominator`
// escaping the radical of `numerator`.
struct AdmissibleSequence {
  std::vector<int> a;
  Ideal numerator;    // sum over n of the (a_n+1)-minor ideals of M_n
  Ideal denominator;  // J times the product of the a_n-minor ideals of M_n
};

// Every admissible sequence, in lexicographic order. The generic sequence
// a_n = rank M_n is always present; r = 0 yields one empty sequence.
std::vector<AdmissibleSequence> admissible_sequences(
    const GenericReductionData& G);

// Shared result envelope of the core computations.
struct CoreReport {
  std::string method;  // theorem16 | saturation | generic_contraction |
                       // bruteforce | onedim_conductor | equimultiple_colon
  Semantics field_semantics = Semantics::AlgClosed;
  Ideal result;
  std::vector<AdmissibleSequence> strata;  // stratified method only
  std::optional<bool> oracle_agreement;
  int r = -1;
  std::vector<int> hilbert;  // h_0 .. h_{r+1}
  std::vector<std::string> notes;
  std::string verdict;
  unsigned long seed = 0;
  std::string sampling;  // "", "exhaustive", "random:<N>"
};

// Stratified closed formula: intersect, over the admissible sequences, the
// contraction of (Q_u + sum_n sqrt(I_{a_n+1}(M_n))) : J prod_n I_{a_n}(M_n)
// from the generic extension back to the algebra. Verifies that the result
// traps the (r+1)-st power of the irrelevant maximal ideal.
CoreReport core_theorem16(const GenericReductionData& G);

// Single saturation (Q_u : J^infinity) contracted to the algebra. Always a
// lower bound for the stratified value; equality exactly when only the
// generic sequence is admissible, which is reported (with the stronger
// sufficient check J inside every sqrt(I_rank(M_n))).
CoreReport core_saturation(const GenericReductionData& G);

// Contraction Q_u A(u) cap A, an upper bound: degree by degree, the constant
// vectors inside the k(u)-row space of M_n, read off from the orthogonality
// conditions against a cleared kernel basis.
CoreReport core_generic_contraction(const GenericReductionData& G);

struct SamplingPlan {
  bool exhaustive = true;  // prime fields only
  int count = 50;          // accepted points when not exhaustive
  unsigned long seed = 1;
};

// Literal intersection over specialized reductions: points of the parameter
// space are filtered through rank M_{r+1}, each survivor contributes the row
// spaces of its M_n, and the degreewise meets are assembled into an ideal.
// Exhaustive enumeration needs a prime field; over the rationals points are
// enumerated by height; random prime-field sampling is seeded. Non-exhaustive
// runs must stay unchanged for 10 extra accepted points or they throw
// InconclusiveStabilization.
CoreReport core_bruteforce(const GenericReductionData& G,
                           const SamplingPlan& plan);

// Degree-piece oracle through module arithmetic: the constant vectors of the
// Jacobson-style meet of the column module, taken over the locus J != 0.
// Rows of the returned matrix are a basis.
KMat core_module_pieces(const ModulePresentation& E, const Ideal& J);

// Coefficientwise reduction of a rational-coefficient ideal into a prime
// field ring with the same variable names. ContextError when the
// characteristic divides a denominator.
Ideal reduce_ideal_mod_p(const Ideal& I, const RingCtxPtr& target);

// One-dimensional local path along a principal reduction (x): the core is
// x K for the conductor-style colon K = (x^r) : I^r. The depth probe looks
// for a nonzerodivisor among small combinations of the generators; when none
// exists the colon value (x^{r+1}) : I^r is still reported, flagged as not
// the core, with a membership witness.
CoreReport core_onedim_conductor(const LocalIdealContext& L,
                                 const Polynomial& x);

// Equimultiple local path: core = J^{r+1} : I^r for a reduction J minimally
// generated by height(I) elements. When the depth probe fails but I is the
// full variable ideal of a standard graded ring, the value is transported
// from the stratified graded formula instead; otherwise NotCohenMacaulay.
// The choice of J is cross-checked against a perturbed second reduction.
CoreReport core_equimultiple(const LocalIdealContext& L, const Ideal& J);

}  // namespace idealcore
