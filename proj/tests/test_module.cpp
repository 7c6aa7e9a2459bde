#include "doctest.h"
#include "support.hpp"

using namespace idealcore;
using namespace testsupport;

namespace {

std::vector<std::vector<Polynomial>> cols2(const RingCtxPtr& R,
                                           const char* a, const char* b,
                                           const char* c, const char* d) {
  return {{pp(R, a), pp(R, b)}, {pp(R, c), pp(R, d)}};
}

}  // namespace

TEST_SUITE("module") {

TEST_CASE("fitting ideal ladder of a diagonal presentation") {
  RingCtxPtr R = RingContext::make({"x", "y"}, FieldSpec::rational());
  ModulePresentation P{R, 2, cols2(R, "x", "0", "0", "y")};
  CHECK(P.fitting(0).is_unit());
  CHECK(ideal_equal(P.fitting(1), idl(R, {"x", "y"})));
  CHECK(ideal_equal(P.fitting(2), idl(R, {"x*y"})));
  CHECK(P.fitting(3).is_zero());
}

TEST_CASE("flattened membership matches hand checks") {
  RingCtxPtr R = RingContext::make({"x", "y"}, FieldSpec::rational());
  FlatModule N = flatten(R, 2, {{pp(R, "x"), Polynomial::zero(R)},
                                {Polynomial::zero(R), pp(R, "y")}});
  CHECK(module_contains(N, {pp(R, "x"), pp(R, "y")}));
  CHECK(module_contains(N, {pp(R, "x*y"), pp(R, "x*y")}));
  CHECK(!module_contains(N, {pp(R, "1"), Polynomial::zero(R)}));
  CHECK(!module_contains(N, {pp(R, "y"), Polynomial::zero(R)}));
  CHECK(module_contains(N, {Polynomial::zero(R), Polynomial::zero(R)}));
}

TEST_CASE("module colon is computed componentwise") {
  RingCtxPtr R = RingContext::make({"x", "y"}, FieldSpec::rational());
  FlatModule N = flatten(R, 2, {{pp(R, "x^2"), Polynomial::zero(R)}});
  auto C = module_colon(N, idl(R, {"x"}));
  FlatModule CM = flatten(R, 2, C);
  CHECK(module_contains(CM, {pp(R, "x"), Polynomial::zero(R)}));
  CHECK(!module_contains(CM, {pp(R, "1"), Polynomial::zero(R)}));
  CHECK(!module_contains(CM, {Polynomial::zero(R), pp(R, "x")}));
}

TEST_CASE("module intersection") {
  RingCtxPtr R = RingContext::make({"x", "y"}, FieldSpec::rational());
  FlatModule A = flatten(R, 2, {{pp(R, "x"), Polynomial::zero(R)},
                                {Polynomial::zero(R), pp(R, "x")}});
  FlatModule B = flatten(R, 2, {{pp(R, "y"), Polynomial::zero(R)},
                                {Polynomial::zero(R), pp(R, "y")}});
  FlatModule M = flatten(R, 2, module_intersect(A, B));
  CHECK(module_contains(M, {pp(R, "x*y"), Polynomial::zero(R)}));
  CHECK(module_contains(M, {Polynomial::zero(R), pp(R, "x*y")}));
  CHECK(!module_contains(M, {pp(R, "x"), Polynomial::zero(R)}));
  CHECK(!module_contains(M, {pp(R, "y"), Polynomial::zero(R)}));
}

TEST_CASE("constant vectors of a submodule") {
  RingCtxPtr R = RingContext::make({"x", "y"}, FieldSpec::rational());
  KMat none = constants_in_submodule(R, 2, {{pp(R, "x"), pp(R, "y")}});
  CHECK(none.rows == 0);
  KMat one = constants_in_submodule(
      R, 2, {{pp(R, "1"), pp(R, "2")}, {pp(R, "x"), pp(R, "2*x")}});
  CHECK(one.rows == 1);
  CHECK(one.at(0, 1) == one.at(0, 0) * 2);
  KMat full = constants_in_submodule(
      R, 2, {{pp(R, "1"), Polynomial::zero(R)},
             {Polynomial::zero(R), pp(R, "1")}});
  CHECK(full.rows == 2);
}

TEST_CASE("meet over the punctured parameter space in one degree") {
  // degree 4 of the two-relation monomial algebra: the meet of the rank
  // loci must recover exactly the degree-4 slice of the stratified value
  GR g = graded_of(ring_saturation_gap());
  big_reduction_number(g.G);
  CoreReport t16 = core_theorem16(g.G);
  const PolyMat& M4 = g.G.matrix(4);
  std::vector<std::vector<Polynomial>> columns;
  for (const auto& row : M4) columns.push_back(row);
  ModulePresentation E{g.G.uring(), g.A.hilbert(4), columns};
  KMat piece = core_module_pieces(E, g.G.J());
  REQUIRE(piece.rows == 3);
  for (int i = 0; i < piece.rows; ++i) {
    std::vector<Coeff> v(piece.cols);
    for (int j = 0; j < piece.cols; ++j) v[j] = piece.at(i, j);
    CHECK(t16.result.contains(g.A.from_coordinates(v, 4)));
  }
}

TEST_CASE("fitting ideals ignore invertible row and column operations") {
  std::string why;
  CHECK_MESSAGE(fitting_invariance(100, 4242, &why), why);
}

}  // TEST_SUITE
