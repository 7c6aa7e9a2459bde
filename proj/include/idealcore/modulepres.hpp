#pragma once

#include <vector>

#include "idealcore/ideal.hpp"
#include "idealcore/linalg.hpp"

namespace idealcore {

// Presentation of M = F/E where F = ctx^h is free and E is spanned by the
// columns of phi. Fitting ideals are the minor ideals of phi; by convention
// the 0-minor ideal is (1).
struct ModulePresentation {
  RingCtxPtr ctx;  // plain polynomial ring
  int h = 0;
  std::vector<std::vector<Polynomial>> columns;  // each of length h

  Ideal fitting(int t) const;
};

// Submodules of F = ctx^h are handled by flattening into an ideal of
// ctx[e_1..e_h] with all products e_i e_j killed; a vector v corresponds to
// sum_j v_j e_j and membership, colon and intersection become ideal
// operations whose e-linear parts recover the module answers.
struct FlatModule {
  RingCtxPtr base;  // the original ring
  RingCtxPtr ext;   // base extended by tag variables
  int h = 0;
  int e0 = 0;  // index of the first tag variable in ext
  Ideal flat;  // flattened submodule plus the tag relations

  Polynomial pack(const std::vector<Polynomial>& v) const;
  // e-linear part as a vector over the base ring
  std::vector<Polynomial> unpack(const Polynomial& f) const;
};

FlatModule flatten(const RingCtxPtr& ctx, int h,
                   const std::vector<std::vector<Polynomial>>& gens);

bool module_contains(const FlatModule& N, const std::vector<Polynomial>& v);

// Generators of the submodule {v in F : v*g in N for all g in G}. G must not
// be the zero ideal.
std::vector<std::vector<Polynomial>> module_colon(const FlatModule& N,
                                                  const Ideal& G);

std::vector<std::vector<Polynomial>> module_intersect(
    const FlatModule& A, const FlatModule& B);

// The meet over all maximal ideals m with J not contained in m of the
// submodules E + mF, computed as the finite intersection over t of
// (E + sqrt(I_t) F) : J*I_{t-1} with I_t the Fitting ideals of P.
std::vector<std::vector<Polynomial>> jacobson_intersection(
    const ModulePresentation& P, const Ideal& J);

// Basis (rows) of the k-space {v in k^h : v in the submodule spanned by
// gens}, via the linear system normal_form(sum v_j e_j) = 0.
KMat constants_in_submodule(const RingCtxPtr& ctx, int h,
                            const std::vector<std::vector<Polynomial>>& gens);

}  // namespace idealcore
