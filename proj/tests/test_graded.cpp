#include "doctest.h"
#include "support.hpp"

using namespace idealcore;
using namespace testsupport;

TEST_SUITE("graded") {

TEST_CASE("hilbert functions of the fixture algebras") {
  CHECK(GradedAlgebra::from_ring(ring_saturation_gap()).hilbert_vector(8) ==
        std::vector<int>{1, 2, 3, 4, 4, 3, 2, 2, 2});
  CHECK(GradedAlgebra::from_ring(ring_two_strata_real()).hilbert_vector(8) ==
        std::vector<int>{1, 2, 3, 4, 4, 3, 2, 1, 1});
  CHECK(GradedAlgebra::from_ring(ring_two_strata_complex()).hilbert_vector(8) ==
        std::vector<int>{1, 2, 3, 3, 2, 1, 1, 1, 1});
  CHECK(GradedAlgebra::from_ring(ring_contraction_gap()).hilbert_vector(6) ==
        std::vector<int>{1, 2, 2, 1, 1, 1, 1});
  CHECK(GradedAlgebra::from_ring(ring_cubic()).hilbert_vector(5) ==
        std::vector<int>{1, 2, 3, 3, 3, 3});
  RingCtxPtr kx = RingContext::make({"x"}, FieldSpec::rational());
  CHECK(GradedAlgebra::from_ring(kx).hilbert_vector(3) ==
        std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("bases are standard monomials in ring order") {
  GradedAlgebra A = GradedAlgebra::from_ring(ring_saturation_gap());
  CHECK(A.basis(0).size() == 1);
  CHECK(A.basis(0)[0].is_one());
  for (int n = 0; n <= 8; ++n)
    CHECK((int)A.basis(n).size() == A.hilbert(n));
  // x1^2*x2^2 is a relation lead, so it is not standard
  for (const Monomial& m : A.basis(4))
    CHECK(!(m.e[0] == 2 && m.e[1] == 2));
}

TEST_CASE("coordinates invert from_coordinates") {
  GradedAlgebra A = GradedAlgebra::from_ring(ring_two_strata_real());
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 6; ++n) {
    Polynomial f = random_homog(A.ring(), n, rng);
    auto v = A.coordinates(f, n);
    CHECK((int)v.size() == A.hilbert(n));
    CHECK(A.coordinates(A.from_coordinates(v, n), n) == v);
  }
}

TEST_CASE("coordinates see the relations") {
  GradedAlgebra A = GradedAlgebra::from_ring(ring_two_strata_real());
  // x1^3*x2 = -x1*x2^3 in the algebra
  auto l = A.coordinates(pp(A.ring(), "x1^3*x2"), 4);
  auto r = A.coordinates(pp(A.ring(), "-x1*x2^3"), 4);
  CHECK(l == r);
  CHECK(A.coordinates(pp(A.ring(), "x2^5"), 5) ==
        std::vector<Coeff>(A.hilbert(5), Coeff(0)));
}

TEST_CASE("multiplication tables match direct products") {
  GradedAlgebra A = GradedAlgebra::from_ring(ring_saturation_gap());
  for (int n = 1; n <= 5; ++n) {
    const KMat& T = A.multiplication(n);
    int hprev = A.hilbert(n - 1);
    REQUIRE(T.rows == hprev * A.nvars());
    REQUIRE(T.cols == A.hilbert(n));
    for (int j = 0; j < A.nvars(); ++j)
      for (int i = 0; i < hprev; ++i) {
        Polynomial p = Polynomial::variable(A.ring(), j) *
                       Polynomial::from_monomial(A.ring(), A.basis(n - 1)[i],
                                                 Coeff(1));
        auto v = A.coordinates(p, n);
        for (int c = 0; c < T.cols; ++c)
          CHECK(T.at(j * hprev + i, c) == v[c]);
      }
  }
}

TEST_CASE("dimension from the standard monomials") {
  CHECK(GradedAlgebra::from_ring(ring_saturation_gap()).krull_dimension() == 1);
  CHECK(GradedAlgebra::from_ring(ring_cubic()).krull_dimension() == 1);
  CHECK(GradedAlgebra::from_ring(ring_contraction_gap()).krull_dimension() ==
        1);
  RingCtxPtr R2 = RingContext::make({"x", "y"}, FieldSpec::rational());
  CHECK(GradedAlgebra::from_ring(R2).krull_dimension() == 2);
}

TEST_CASE("inhomogeneous relations are rejected") {
  RingCtxPtr R = RingContext::make({"x", "y"}, FieldSpec::rational());
  CHECK_THROWS_AS(GradedAlgebra::make(R, {pp(R, "x + x^2")}), ContextError);
  CHECK_THROWS_AS(GradedAlgebra::from_ring(ring_four_vars()), ContextError);
}

TEST_CASE("generic form data has the expected shape") {
  GR g = graded_of(ring_saturation_gap());
  CHECK(g.G.dim() == 1);
  CHECK(g.G.ngens() == 2);
  CHECK(g.G.n_max() == 12);  // 2 * (relation degree 5) + 2 vars
  CHECK(g.G.uring()->nvars() == 2);
  CHECK(g.G.uring()->vars[g.G.uvar(0, 0)] == "u1");
  CHECK(g.G.uring()->vars[g.G.uvar(0, 1)] == "u2");
  for (int n = 1; n <= 5; ++n) {
    const PolyMat& M = g.G.matrix(n);
    REQUIRE((int)M.size() == g.A.hilbert(n - 1) * g.G.dim());
    REQUIRE((int)M[0].size() == g.A.hilbert(n));
    for (const auto& row : M)
      for (const Polynomial& e : row) {
        CHECK(e.total_degree() <= 1);
        CHECK(e.is_homogeneous());
      }
  }
  CHECK(g.G.generic_rank(1) == 1);
  CHECK(g.G.generic_rank(2) == 2);
  CHECK(g.G.generic_rank(3) == 3);
  CHECK(g.G.generic_rank(4) == 4);
}

TEST_CASE("minor ideals come scaled by the window") {
  GR g = graded_of(ring_saturation_gap());
  // t = 0 gives the unit ideal, oversized t gives zero
  CHECK(g.G.det_ideal(1, 0).is_unit());
  CHECK(g.G.det_ideal(1, 5).is_zero());
  // degree 1: one generic form against two variables, minors are the u's
  CHECK(ideal_equal(g.G.det_ideal(1, 1), idl(g.G.uring(), {"u1", "u2"})));
}

TEST_CASE("ideal pieces reassemble to the same ideal") {
  GR g = graded_of(ring_saturation_gap());
  Ideal I = idl(g.A.ring(), {"x1^3", "x1^2*x2"});
  std::vector<std::vector<std::vector<Coeff>>> pieces(g.G.n_max() + 1);
  for (int n = 1; n <= g.G.n_max(); ++n)
    pieces[n] = graded_piece_of_ideal(g.A, I.gens(), n);
  auto gens = assemble_graded_ideal(g.A, pieces);
  CHECK(ideal_equal(Ideal(g.A.ring(), gens), I));
}

TEST_CASE("piece dimensions follow ideal membership") {
  // monomial quotient and monomial ideal: the degree-n piece is spanned by
  // the standard monomials divisible by the generator, so counting is exact
  GR g = graded_of(ring_saturation_gap());
  Ideal I = idl(g.A.ring(), {"x1^2"});
  for (int n = 2; n <= 6; ++n) {
    auto rows = graded_piece_of_ideal(g.A, I.gens(), n);
    KMat m = KMat::from_rows(rows, g.A.hilbert(n), g.A.ring()->field);
    int dim = rank(m);
    int expect = 0;
    for (const Monomial& b : g.A.basis(n))
      if (b.e[0] >= 2) ++expect;
    CHECK(dim == expect);
  }
}

}  // TEST_SUITE
