#include <doctest.h>

#include "oracles.hpp"
#include "tgh/curvature.hpp"
#include "tgh/errors.hpp"
#include "tgh/standard_algebras.hpp"

using namespace tgh;

namespace {

Vector e(int n, int i)
{
  return Vector::Unit(n, i);
}

std::vector<Eigen::MatrixXd> sl2_matrices(double a, double b)
{
  Eigen::MatrixXd N(2, 2), U(2, 2), H(2, 2);
  N << 0, 1, -1, 0;
  U << 0, 1, 0, 0;
  H << 1, 0, 0, -1;
  return {a * N, 2 * b * U, b * H};
}

} // namespace

TEST_CASE("bracket: abelian algebra brackets vanish")
{
  const MetricLieAlgebra M = abelian_algebra(4);
  CHECK(bracket(M, Vector::Ones(4), Vector::LinSpaced(4, -1, 2)).norm() == 0.0);
}

TEST_CASE("bracket: [Z, X1] = X1 + X2 on the nonhomogeneous example")
{
  const MetricLieAlgebra M = nonhomo_algebra();
  const Vector expected = e(4, 1) + e(4, 2);
  CHECK((bracket(M, e(4, 0), e(4, 1)) - expected).norm() == 0.0);
  CHECK((bracket(M, e(4, 0), e(4, 2)) - (e(4, 2) - e(4, 1))).norm() == 0.0);
  CHECK((bracket(M, e(4, 0), e(4, 3)) - 2 * e(4, 3)).norm() == 0.0);
}

TEST_CASE("bracket: sl2 constants agree with a matrix commutator oracle")
{
  for (double a : {0.5, 1.0, 2.0})
    for (double b : {0.5, 1.0, 2.0}) {
      const MetricLieAlgebra M = sl2_algebra(a, b);
      const std::vector<double> c = oracle::commutator_constants(sl2_matrices(a, b));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) CHECK(M.algebra().constants()(i, j, k) == doctest::Approx(c[(i * 3 + j) * 3 + k]).epsilon(1e-14));
    }
  const MetricLieAlgebra M = sl2_algebra(1, 1);
  CHECK((bracket(M, e(3, 0), e(3, 1)) - 2 * e(3, 2)).norm() < 1e-15);
}

TEST_CASE("bracket: bilinear and antisymmetric, rejects wrong lengths")
{
  const MetricLieAlgebra M = sl2_algebra(2, 0.5);
  const Vector x = Vector::LinSpaced(3, 0.3, -1.1), y = Vector::LinSpaced(3, 2.0, 0.7), z(Vector::Ones(3));
  CHECK((bracket(M, x, y) + bracket(M, y, x)).norm() < 1e-14);
  CHECK((bracket(M, 2 * x + z, y) - 2 * bracket(M, x, y) - bracket(M, z, y)).norm() < 1e-13);
  CHECK_THROWS_AS(bracket(M, Vector::Ones(2), y), DimensionMismatch);
}

TEST_CASE("jacobi_residual: zero for valid algebras, positive for a perturbed sl2")
{
  CHECK(jacobi_residual(abelian_algebra(3).algebra()) == 0.0);
  CHECK(jacobi_residual(nonhomo_algebra().algebra()) == 0.0);
  StructureConstants c = sl2_algebra(1, 1).algebra().constants();
  c(0, 1, 0) += 0.1;
  c(1, 0, 0) -= 0.1;
  CHECK(jacobi_residual(c) > 0.1);
  CHECK_THROWS_AS(LieAlgebra{c}, JacobiViolation);
  try {
    LieAlgebra bad(c);
  } catch (const JacobiViolation & err) {
    CHECK(err.value() == doctest::Approx(jacobi_residual(c)));
  }
}

TEST_CASE("metric construction: rejects indefinite and asymmetric Gram matrices")
{
  const LieAlgebra L = abelian_algebra(2).algebra();
  Matrix G(2, 2);
  G << 1, 0, 0, -2;
  CHECK_THROWS_AS(MetricLieAlgebra(L, G), NotPositiveDefinite);
  try {
    MetricLieAlgebra bad(L, G);
  } catch (const NotPositiveDefinite & err) {
    CHECK(err.value() == doctest::Approx(-2.0));
  }
  G << 1, 0.1, 0, 1;
  CHECK_THROWS(MetricLieAlgebra(L, G));
}

TEST_CASE("metric construction: orthonormal frame satisfies P^T G P = I")
{
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix G = oracle::random_spd(rng, 5);
    const MetricLieAlgebra M(orthogonal_sum(sl2_algebra(1, 2), abelian_algebra(2)).algebra(), G);
    const Matrix P = M.onb_change();
    CHECK((P.transpose() * G * P - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
    const Vector x = Vector::LinSpaced(5, -1, 1);
    CHECK((M.from_frame(M.to_frame(x)) - x).norm() < 1e-13);
  }
}

TEST_CASE("subspace: validates independence and orthonormality")
{
  const MetricLieAlgebra M = abelian_algebra(3);
  Matrix dep(3, 2);
  dep << 1, 2, 0, 0, 0, 0;
  CHECK_THROWS(Subspace(M, dep, false));
  Matrix skew(3, 2);
  skew << 1, 1, 0, 1, 0, 0;
  CHECK_NOTHROW(Subspace(M, skew, false));
  CHECK_THROWS(Subspace(M, skew, true));
  const Subspace S = Subspace::orthonormalized(M, skew);
  CHECK((S.basis().transpose() * S.basis() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  const Subspace C = Subspace::complement(M, skew);
  CHECK(C.dim() == 1);
  CHECK((skew.transpose() * C.basis()).norm() < 1e-14);
}

TEST_CASE("levi_civita: abelian connection vanishes")
{
  std::mt19937_64 rng(5);
  const MetricLieAlgebra M(abelian_algebra(4).algebra(), oracle::random_spd(rng, 4));
  const ConnectionTable G = levi_civita(M);
  for (int i = 0; i < 4; ++i) CHECK(G.covariant_operator(i).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("levi_civita: nabla_X1 X1 = Z and nabla_Z Z = 0 on the nonhomogeneous example")
{
  const MetricLieAlgebra M = nonhomo_algebra();
  const ConnectionTable G = levi_civita(M);
  // identity Gram: frame = input basis
  CHECK((M.from_frame(G.covariant(M.to_frame(e(4, 1)), M.to_frame(e(4, 1)))) - e(4, 0)).norm() < 1e-14);
  CHECK(G.covariant(M.to_frame(e(4, 0)), M.to_frame(e(4, 0))).norm() < 1e-14);
  CHECK((M.from_frame(G.covariant(M.to_frame(e(4, 3)), M.to_frame(e(4, 3)))) - 2 * e(4, 0)).norm() < 1e-14);
}

TEST_CASE("levi_civita: agrees with the Koszul oracle for random metrics")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const MetricLieAlgebra M(sl2_algebra(1, 2).algebra(), oracle::random_spd(rng, 3));
    const oracle::Algebra A = oracle::from(M);
    const ConnectionTable G = levi_civita(M);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Vector lib = M.from_frame(G.covariant(M.to_frame(e(3, i)), M.to_frame(e(3, j))));
        CHECK((lib - oracle::nabla(A, e(3, i), e(3, j))).norm() < 1e-11);
      }
    CHECK(G.torsion_residual(M.frame_constants()) < 1e-12);
    CHECK(G.metric_residual() < 1e-13);
  }
}

TEST_CASE("curvature_tensor: abelian R = 0 and [Z,Y] = 2Y has sectional -4")
{
  const CurvatureData R0 = curvature_tensor(abelian_algebra(3));
  CHECK(R0.eigenvalues().cwiseAbs().maxCoeff() == 0.0);
  const MetricLieAlgebra H = hyperbolic_plane_algebra(2.0);
  CHECK(sectional(H, e(2, 0), e(2, 1)) == doctest::Approx(-4.0).epsilon(1e-14));
  const CurvatureSpectrum S = curvature_operator_eigen(H);
  REQUIRE(S.eigenvalues.size() == 1);
  CHECK(S.eigenvalues(0) == doctest::Approx(-4.0).epsilon(1e-14));
}

TEST_CASE("curvature_operator_eigen: sl2 spectrum matches a brute-force operator")
{
  for (double a : {0.5, 1.0, 2.0}) {
    const MetricLieAlgebra M = sl2_algebra(a, 1.0);
    const Vector lib = curvature_operator_eigen(M).eigenvalues;
    const Vector ref = oracle::curvature_operator_eigenvalues(oracle::from(M));
    CHECK((lib - ref).cwiseAbs().maxCoeff() < 1e-12);
  }
  std::mt19937_64 rng(2);
  const MetricLieAlgebra M(nonhomo_algebra().algebra(), oracle::random_spd(rng, 4));
  CHECK((curvature_operator_eigen(M).eigenvalues - oracle::curvature_operator_eigenvalues(oracle::from(M)))
          .cwiseAbs()
          .maxCoeff() < 1e-10);
}

TEST_CASE("curvature_tensor: components agree with the oracle and satisfy the symmetries")
{
  std::mt19937_64 rng(7);
  const MetricLieAlgebra M(nonhomo_algebra().algebra(), oracle::random_spd(rng, 4));
  const oracle::Algebra A = oracle::from(M);
  const CurvatureData R = curvature_tensor(M);
  const Matrix P = M.onb_change();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const double ref = A.inner(oracle::curvature(A, P.col(i), P.col(j), P.col(k)), P.col(l));
          CHECK(R.component(i, j, k, l) == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
        }
  CHECK(R.symmetry_residual() < 1e-10);
  CHECK(R.bianchi_residual() < 1e-10);
  CHECK(R.reconstruction_residual() < 1e-10);
}

TEST_CASE("sectional: plane invariance and degenerate planes")
{
  std::mt19937_64 rng(9);
  const MetricLieAlgebra M(sl2_algebra(1, 1).algebra(), oracle::random_spd(rng, 3));
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    Vector x(3), y(3);
    for (int i = 0; i < 3; ++i) {
      x(i) = g(rng);
      y(i) = g(rng);
    }
    const double k = sectional(M, x, y);
    CHECK(sectional(M, 3 * x + y, y) == doctest::Approx(k).epsilon(1e-10));
    CHECK(k == doctest::Approx(oracle::sectional(oracle::from(M), x, y)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(sectional(M, e(3, 0), 2 * e(3, 0)), DegeneratePlane);
}

TEST_CASE("orthogonal_sum and change_basis preserve curvature")
{
  const MetricLieAlgebra S = orthogonal_sum(sl2_algebra(1, 2), abelian_algebra(2));
  CHECK(S.dim() == 5);
  CHECK(bracket(S, e(5, 0), e(5, 3)).norm() == 0.0);
  std::mt19937_64 rng(4);
  const Matrix Q = oracle::random_orthogonal(rng, 5);
  const MetricLieAlgebra C = change_basis(S, Q);
  // the vector with coordinates Q^{-1} x in the new basis is x
  const Vector x = e(5, 0), y = e(5, 2);
  const Vector xn = Q.transpose() * x, yn = Q.transpose() * y;
  CHECK(sectional(C, xn, yn) == doctest::Approx(sectional(S, x, y)).epsilon(1e-11));
}
