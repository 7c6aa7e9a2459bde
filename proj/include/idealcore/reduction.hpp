#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idealcore/graded.hpp"
#include "idealcore/ideal.hpp"

namespace idealcore {

// Which parameter points a computation sees. AlgClosed compares the loci
// V_n through radical membership, i.e. through all geometric points; the
// other two compare literal point sets (rational points of a projective
// line of parameters, or an exhaustively enumerated prime-field projective
// space). Results are labelled with the semantics that produced them.
enum class Semantics { AlgClosed, RationalPoints, PrimeFieldPoints };

std::string semantics_name(Semantics s);

struct StabilizationReport {
  int r = -1;
  int n_max = 0;
  int trailing_equal = 0;  // equal comparisons above r inside the window
  std::vector<int> hilbert;
};

// Largest n with V_n != V_{n+1}, where V_n is the locus of parameters whose
// form fails to carry degree n-1 onto degree n. Demands at least two equal
// comparisons at the top of the window; fills G.r under the default
// geometric semantics. Point semantics never see a larger r than the
// geometric one, so the geometric r is a safe degree window everywhere.
int big_reduction_number(const GenericReductionData& G,
                         Semantics sem = Semantics::AlgClosed,
                         StabilizationReport* rep = nullptr);

// Specialization test: do the forms with coefficient matrix alpha (d rows of
// m entries) generate a minimal reduction? Decided by rank of the evaluated
// presentation in degree r+1.
bool is_minimal_reduction(const GenericReductionData& G,
                          const std::vector<std::vector<Coeff>>& alpha,
                          int r = -1);

// Least n with Q*A_n = A_{n+1} for degree one forms Q of a graded algebra.
// Surjectivity in one degree propagates upward, so the first fill decides.
int reduction_number_graded(const GradedAlgebra& A,
                            const std::vector<Polynomial>& forms,
                            int n_cap = 0);

// Ideals of a localized ring: the ring is read at the maximal ideal generated
// by all variables. Everything must be homogeneous for some nonnegative
// variable weighting that is positive on the support of I (found by solving
// the term constraints when not supplied).
struct LocalIdealContext {
  RingCtxPtr ring;
  Ideal I;
  std::vector<mpq_class> weights;
};

LocalIdealContext make_local_context(
    const RingCtxPtr& ring, Ideal I,
    std::optional<std::vector<mpq_class>> weights = std::nullopt);

// Membership after localization: f lies in N locally iff (N : f) meets the
// units, i.e. some colon generator has a nonzero constant term.
bool local_contains(const Ideal& N, const Polynomial& f);
bool local_contains_ideal(const Ideal& N, const Ideal& M);
bool local_ideal_equal(const Ideal& a, const Ideal& b);

// Least n with J*I^n = I^n+1 locally; NotAReduction past the cap.
int reduction_number_ideal(const LocalIdealContext& L, const Ideal& J,
                           int cap = 24);

// The ring R[u] carrying the generic forms b_i = sum_j u_ij x_j of G, with
// the quotient relations carried over. contract_generic eliminates the u
// block and lands back in R.
struct GenericExtension {
  RingCtxPtr ext;
  std::vector<Polynomial> forms;  // the b_i inside ext
};

GenericExtension extend_by_generic_forms(const RingCtxPtr& ring,
                                         const GenericReductionData& G);
Ideal contract_generic(const Ideal& K, const RingCtxPtr& ring,
                       const RingCtxPtr& uring);

// Representatives of projective space P^{n-1} over F_p: first nonzero
// coordinate scaled to one. Guarded against exploding sizes.
std::vector<std::vector<Coeff>> projective_points(int n, long p);

// The containment chain between I^{r+1} and the core cut by the generic
// combination ideal Q = (sum_j u_ij a_j) of R[u]: each member contracts a
// colon of Q back to R.
struct ColonChain {
  int r = -1;
  Ideal power;   // I^{r+1}
  Ideal inner;   // [Q : (Q : I^{r+1})] cap R
  Ideal middle;  // [Q : (I^r Q : I^{r+1})] cap R
  Ideal outer;   // (Q : J^inf) cap R
  bool chain_ok = false;
  std::vector<std::string> notes;
};

ColonChain colon_chain(const LocalIdealContext& L);

// Special fiber F(I) = R[It]/m R[It], presented on one T variable per
// generator of I. Relations come from the Rees kernel with the base
// variables killed.
struct FiberRing {
  RingCtxPtr tring;
  std::vector<Polynomial> relations;
  bool graded = false;       // relations homogeneous in the standard grading
  GradedAlgebra algebra;     // only when graded
};

FiberRing fiber_ring(const LocalIdealContext& L);

}  // namespace idealcore
