#pragma once

#include <memory>
#include <vector>

#include "idealcore/ideal.hpp"
#include "idealcore/linalg.hpp"

namespace idealcore {

// Standard graded algebra k[x_1..x_m]/D with D homogeneous. Degree data
// (monomial bases, Hilbert function, multiplication tables) is computed on
// demand and cached; the cache is write-once per degree.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;

  // relations must be homogeneous of positive degree; empty gives k[x].
  static GradedAlgebra make(const RingCtxPtr& ambient,
                            const std::vector<Polynomial>& relations);
  // Accepts a plain ring or an existing quotient context.
  static GradedAlgebra from_ring(const RingCtxPtr& ring);

  const RingCtxPtr& ring() const;
  int nvars() const;

  // Standard monomials of degree n (not divisible by any relation lead),
  // strictly descending in the ring order. basis(0) = {1}.
  const std::vector<Monomial>& basis(int n) const;
  int hilbert(int n) const;
  std::vector<int> hilbert_vector(int n_max) const;

  // Largest variable subset that meets no relation lead monomial: the
  // dimension of the quotient.
  int krull_dimension() const;

  // Coefficient vector of the class of f on basis(n); f must be homogeneous
  // of degree n modulo the relations.
  std::vector<Coeff> coordinates(const Polynomial& f, int n) const;
  Polynomial from_coordinates(const std::vector<Coeff>& v, int n) const;

  // h(n-1)*m x h(n) table; row j*h(n-1)+i holds the degree-n coordinates of
  // x_j * basis(n-1)[i].
  const KMat& multiplication(int n) const;

  bool valid() const { return impl_ != nullptr; }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// One generic form per dimension: y_i = sum_j u_ij x_j with independent
// indeterminate coefficients. matrix(n) presents degree n of A over degree
// n-1 along these forms; its minor ideals cut out the parameter loci where
// specializations y(alpha) fail to span enough of A_n.
class GenericReductionData {
 public:
  GenericReductionData() = default;

  const GradedAlgebra& algebra() const;
  int dim() const;     // number of generic forms
  int ngens() const;   // number of algebra variables
  const RingCtxPtr& uring() const;
  int uvar(int i, int j) const;  // index of u_ij in uring
  int n_max() const;

  const PolyMat& matrix(int n) const;  // d*h(n-1) x h(n), entries u-linear
  Ideal det_ideal(int n, int t) const;
  int generic_rank(int n) const;

  // Filled once the stabilization degree is known (reduction layer).
  int r() const;
  const Ideal& J() const;  // det_ideal(r+1, h(r+1))
  void set_r(int r) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  friend GenericReductionData build_generic_data(const GradedAlgebra&, int);
};

// n_max <= 0 selects the default window 2*(max relation degree) + nvars,
// floored at 4.
GenericReductionData build_generic_data(const GradedAlgebra& A, int n_max = 0);

// Minimal homogeneous generators of the ideal whose degree-n piece is spanned
// by pieces[n] (coordinate rows on basis(n)). pieces[0] must be empty and the
// sequence must already be closed under multiplication by degree one.
std::vector<Polynomial> assemble_graded_ideal(
    const GradedAlgebra& A,
    const std::vector<std::vector<std::vector<Coeff>>>& pieces);

// Coordinate rows of the degree-n piece of the ideal generated by gens.
std::vector<std::vector<Coeff>> graded_piece_of_ideal(
    const GradedAlgebra& A, const std::vector<Polynomial>& gens, int n);

}  // namespace idealcore
