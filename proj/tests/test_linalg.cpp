#include "doctest.h"
#include "support.hpp"

using namespace idealcore;
using namespace testsupport;

namespace {

KMat mk(const std::vector<std::vector<long>>& rows, FieldSpec f) {
  std::vector<std::vector<Coeff>> cs;
  for (auto& r : rows) cs.emplace_back(r.begin(), r.end());
  return KMat::from_rows(cs, (int)rows[0].size(), f);
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rref and rank over the rationals") {
  KMat m = mk({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, FieldSpec::rational());
  CHECK(rank(m) == 2);
  std::vector<int> pivots;
  KMat e = m;
  CHECK(rref(e, &pivots) == 2);
  CHECK(pivots == std::vector<int>{0, 1});
  // reduced form: identity block on the pivots
  CHECK(e.at(0, 0) == 1);
  CHECK(e.at(0, 1) == 0);
  CHECK(e.at(1, 1) == 1);
  CHECK(e.at(2, 0) == 0);
}

TEST_CASE("rank over a prime field sees the characteristic") {
  KMat m = mk({{1, 3}, {3, 9}}, FieldSpec::rational());
  CHECK(rank(m) == 1);
  KMat m7 = mk({{1, 3}, {3, 2}}, FieldSpec::prime_field(7));
  CHECK(rank(m7) == 1);  // det = 2 - 9 = -7 = 0 mod 7
  KMat mq = mk({{1, 3}, {3, 2}}, FieldSpec::rational());
  CHECK(rank(mq) == 2);
}

TEST_CASE("kernel and row space are orthogonal complements in size") {
  KMat m = mk({{1, 2, 0, 1}, {0, 1, 1, 0}, {1, 3, 1, 1}},
              FieldSpec::rational());
  auto ker = kernel_basis(m);
  auto rows = rowspace_basis(m);
  CHECK((int)rows.size() == rank(m));
  CHECK(rows.size() + ker.size() == 4);
  // every kernel vector annihilates every matrix row
  for (auto& v : ker)
    for (int i = 0; i < m.rows; ++i) {
      Coeff s = 0;
      for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
      CHECK(s == 0);
    }
}

TEST_CASE("row space membership") {
  FieldSpec f = FieldSpec::rational();
  std::vector<std::vector<Coeff>> basis = {{Coeff(1), Coeff(0), Coeff(1)},
                                           {Coeff(0), Coeff(1), Coeff(2)}};
  CHECK(in_rowspace({Coeff(2), Coeff(3), Coeff(8)}, basis, 3, f));
  CHECK(!in_rowspace({Coeff(0), Coeff(0), Coeff(1)}, basis, 3, f));
  CHECK(in_rowspace({Coeff(0), Coeff(0), Coeff(0)}, basis, 3, f));
}

TEST_CASE("row space intersection") {
  FieldSpec f = FieldSpec::rational();
  std::vector<std::vector<Coeff>> A = {{Coeff(1), Coeff(0), Coeff(0)},
                                       {Coeff(0), Coeff(1), Coeff(0)}};
  std::vector<std::vector<Coeff>> B = {{Coeff(0), Coeff(1), Coeff(0)},
                                       {Coeff(0), Coeff(0), Coeff(1)}};
  auto C = intersect_rowspaces(A, B, 3, f);
  CHECK(C.size() == 1);
  CHECK(in_rowspace({Coeff(0), Coeff(5), Coeff(0)}, C, 3, f));
  CHECK(!in_rowspace({Coeff(1), Coeff(0), Coeff(0)}, C, 3, f));
}

TEST_CASE("fraction free rank and determinant of parametric matrices") {
  RingCtxPtr U = RingContext::make({"u1", "u2"}, FieldSpec::rational());
  PolyMat M = {{pp(U, "u1"), pp(U, "u2")}, {pp(U, "u2"), pp(U, "u1")}};
  CHECK(rank_poly(M) == 2);
  CHECK(det_poly(M) == pp(U, "u1^2 - u2^2"));
  PolyMat S = {{pp(U, "u1"), pp(U, "u2")}, {pp(U, "2*u1"), pp(U, "2*u2")}};
  CHECK(rank_poly(S) == 1);
  CHECK(det_poly(S).is_zero());
}

TEST_CASE("parametric nullspace annihilates the matrix") {
  RingCtxPtr U = RingContext::make({"u1", "u2"}, FieldSpec::rational());
  PolyMat M = {{pp(U, "u1"), pp(U, "u2"), pp(U, "u1 + u2")}};
  auto ns = nullspace_poly(M);
  CHECK(ns.size() == 2);
  for (auto& v : ns) {
    Polynomial s = Polynomial::zero(U);
    for (size_t j = 0; j < v.size(); ++j) s = s + M[0][j] * v[j];
    CHECK(s.is_zero());
  }
}

TEST_CASE("specialization commutes with evaluation") {
  RingCtxPtr U = RingContext::make({"u1", "u2"}, FieldSpec::rational());
  PolyMat M = {{pp(U, "u1 + 1"), pp(U, "u2")}, {pp(U, "u2 - 2"), pp(U, "u1")}};
  KMat K = eval_poly_matrix(M, {Coeff(3), Coeff(2)});
  CHECK(K.at(0, 0) == 4);
  CHECK(K.at(0, 1) == 2);
  CHECK(K.at(1, 0) == 0);
  CHECK(K.at(1, 1) == 3);
}

TEST_CASE("generic rank bounds every specialization") {
  std::string why;
  CHECK_MESSAGE(rank_property(50, 917, &why), why);
}

}  // TEST_SUITE
