#pragma once

#include <vector>

#include "idealcore/field.hpp"
#include "idealcore/polynomial.hpp"

namespace idealcore {

// Dense matrix over the coefficient field.
struct KMat {
  int rows = 0, cols = 0;
  FieldSpec field;
  std::vector<Coeff> a;

  KMat() = default;
  KMat(int r, int c, FieldSpec f)
      : rows(r), cols(c), field(f), a((size_t)r * c, Coeff(0)) {}
  Coeff& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const Coeff& at(int i, int j) const { return a[(size_t)i * cols + j]; }
  static KMat from_rows(const std::vector<std::vector<Coeff>>& rows,
                        int ncols, FieldSpec f);
};

// In-place reduced row echelon form; returns rank. Pivot columns appended to
// *pivots if given. Deterministic (first nonzero pivot per column).
int rref(KMat& m, std::vector<int>* pivots = nullptr);

int rank(KMat m);

// Basis of the right kernel {v : M v = 0}.
std::vector<std::vector<Coeff>> kernel_basis(KMat m);

// Nonzero rows of the rref: canonical basis of the row space.
std::vector<std::vector<Coeff>> rowspace_basis(KMat m);

// Zassenhaus: basis of rowspace(A) ∩ rowspace(B), both in k^ncols.
std::vector<std::vector<Coeff>> intersect_rowspaces(
    const std::vector<std::vector<Coeff>>& A,
    const std::vector<std::vector<Coeff>>& B, int ncols, FieldSpec f);

bool in_rowspace(const std::vector<Coeff>& v,
                 const std::vector<std::vector<Coeff>>& basis, int ncols,
                 FieldSpec f);

// ---------------------------------------------------------------------------
// Matrices with polynomial entries, treated over the fraction field k(u).
// All algorithms are fraction-free (Bareiss); divisions are exact.

using PolyMat = std::vector<std::vector<Polynomial>>;

int rank_poly(const PolyMat& m);

Polynomial det_poly(const PolyMat& m);  // square input

// Basis of the right kernel over k(u), entries cleared to polynomials
// (Cramer construction from a maximal nonsingular minor).
std::vector<std::vector<Polynomial>> nullspace_poly(const PolyMat& m);

// Evaluate a polynomial matrix at a point (full substitution of every
// variable that occurs).
KMat eval_poly_matrix(const PolyMat& m, const std::vector<Coeff>& point);

}  // namespace idealcore
