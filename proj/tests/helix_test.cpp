#include <doctest.h>

#include "oracles.hpp"
#include "tgh/classify.hpp"
#include "tgh/errors.hpp"
#include "tgh/helix.hpp"
#include "tgh/standard_algebras.hpp"

using namespace tgh;

namespace {

Vector e(int n, int i)
{
  return Vector::Unit(n, i);
}

} // namespace

TEST_CASE("helix_witness: sl2 itself has a trivial ideal and recovers (a, b)")
{
  const MetricLieAlgebra M = sl2_algebra(1, 1);
  const HelixWitness W = helix_witness(M, e(3, 0));
  CHECK(W.ideal.dim() == 0);
  CHECK(W.recovered_a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(W.recovered_b == doctest::Approx(1.0).epsilon(1e-12));
  // the quotient is sl2 itself, in the Frenet basis (T, N1, N2) = (E1, -E3, E2)
  const StructureConstants & q = W.quotient;
  CHECK((q.bracket_of_basis(0, 1) - Eigen::Vector3d(-2, 0, 2)).norm() < 1e-12);
  CHECK((q.bracket_of_basis(0, 2) - Eigen::Vector3d(0, -2, 0)).norm() < 1e-12);
  CHECK((q.bracket_of_basis(1, 2) - Eigen::Vector3d(0, 0, -2)).norm() < 1e-12);
  for (const auto & [name, value] : W.residuals) CHECK_MESSAGE(value < 1e-9, name);
}

TEST_CASE("helix_witness: sl2 plus an abelian factor on the parameter grid")
{
  for (double a : {0.5, 1.0, 2.0})
    for (double b : {0.5, 1.0, 2.0}) {
      const MetricLieAlgebra M = orthogonal_sum(sl2_algebra(a, b), abelian_algebra(2));
      const HelixWitness W = helix_witness(M, e(5, 0));
      REQUIRE(W.ideal.dim() == 2);
      // the ideal is the abelian factor
      CHECK(W.ideal.basis().topRows(3).norm() < 1e-12);
      CHECK(W.recovered_a == doctest::Approx(a).epsilon(1e-10));
      CHECK(W.recovered_b == doctest::Approx(b).epsilon(1e-10));
      for (const auto & [name, value] : W.residuals) CHECK_MESSAGE(value < 1e-9, name);
      CHECK(bracket_table_residual(M, W.T, W.N1, W.N2, W.k1, W.k2) < 1e-9);
    }
}

TEST_CASE("helix_witness: circles are rejected")
{
  CHECK_THROWS_AS(helix_witness(nonhomo_algebra(), e(4, 1)), NotHelixOrderTwo);
}

TEST_CASE("sl2_recognize: quotient constants, Heisenberg, basis changes")
{
  const MetricLieAlgebra M = sl2_algebra(1, 1);
  const Sl2Recognition r = sl2_recognize(helix_witness(M, e(3, 0)).quotient, Matrix::Identity(3, 3));
  CHECK(r.a == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.b == doctest::Approx(1.0).epsilon(1e-8));

  const MetricLieAlgebra H = heisenberg_algebra();
  CHECK_THROWS_AS(sl2_recognize(H.algebra().constants(), H.gram()), NotRecognized);
  const MetricLieAlgebra S = hyperbolic_plane_algebra();
  CHECK_THROWS_AS(sl2_recognize(orthogonal_sum(S, abelian_algebra(1)).algebra().constants(), Matrix::Identity(3, 3)),
                  NotRecognized);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const MetricLieAlgebra C = change_basis(sl2_algebra(2, 0.5), oracle::random_orthogonal(rng, 3));
    const Sl2Recognition rc = sl2_recognize(C.algebra().constants(), C.gram());
    CHECK(rc.a == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(rc.b == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(rc.table_residual < 1e-8);
  }
}

TEST_CASE("sl2_recognize: non-orthonormal bases of sl2")
{
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix A = oracle::random_spd(rng, 3) + oracle::random_orthogonal(rng, 3);
    const MetricLieAlgebra C = change_basis(sl2_algebra(0.5, 2), A);
    const Sl2Recognition rc = sl2_recognize(C.algebra().constants(), C.gram());
    CHECK(rc.a == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(rc.b == doctest::Approx(2.0).epsilon(1e-8));
  }
}

TEST_CASE("classify_case: the three cases and the refusal")
{
  const ClassificationReport g = classify_case(orthogonal_sum(nonhomo_algebra(), abelian_algebra(1)), e(5, 4));
  CHECK(g.case_tag == CaseTag::GeodesicNormal);
  REQUIRE(g.eigenvalue_lambda);
  CHECK(*g.eigenvalue_lambda == doctest::Approx(0.0));

  const ClassificationReport c = classify_case(nonhomo_algebra(), e(4, 3));
  CHECK(c.case_tag == CaseTag::CircleNormal);
  CHECK(c.frenet.curvatures[0] == doctest::Approx(2.0).epsilon(1e-12));
  REQUIRE(c.character_hint);
  // X -> <[X, Y], Y> is 2 Z*
  CHECK((*c.character_hint - 2 * e(4, 0)).norm() < 1e-12);
  REQUIRE(c.character_residual);
  CHECK(*c.character_residual < 1e-10);

  const ClassificationReport h = classify_case(orthogonal_sum(sl2_algebra(1, 2), abelian_algebra(2)), e(5, 0));
  CHECK(h.case_tag == CaseTag::HelixOrderTwo);
  REQUIRE(h.witness);
  CHECK(h.witness->residuals.at("ideal_residual") < 1e-10);
  CHECK(h.witness->recovered_a == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(h.witness->recovered_b == doctest::Approx(2.0).epsilon(1e-8));

  CHECK_THROWS_AS(classify_case(nonhomo_algebra(), e(4, 1)), NotTotallyGeodesic);
  CHECK(to_string(CaseTag::HelixOrderTwo) == "HelixOrderTwo");
}

TEST_CASE("classify_case: the opposite Borel normal of sl2 is also a helix")
{
  const MetricLieAlgebra M = sl2_algebra(1, 1);
  const ClassificationReport r = classify_case(M, Eigen::Vector3d(1, 2, 0).normalized());
  CHECK(r.case_tag == CaseTag::HelixOrderTwo);
  REQUIRE(r.witness);
  CHECK(r.witness->residuals.at("sl2_residual") < 1e-8);
}
