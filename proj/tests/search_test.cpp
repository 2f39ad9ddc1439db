#include <doctest.h>

#include "oracles.hpp"
#include "tgh/search.hpp"
#include "tgh/standard_algebras.hpp"
#include "tgh/tg_analysis.hpp"

using namespace tgh;

namespace {

bool contains_up_to_sign(const std::vector<Vector> & list, const Vector & v, double tol)
{
  for (const Vector & w : list) {
    if ((w - v).norm() < tol || (w + v).norm() < tol) return true;
  }
  return false;
}

} // namespace

TEST_CASE("search: nonhomogeneous example gives exactly +-Y")
{
  const SearchResult r = search_tg_hyperplanes(nonhomo_algebra());
  REQUIRE(r.normals.size() == 1);
  CHECK((r.normals[0] - Vector::Unit(4, 3)).norm() < 1e-10);
  CHECK(r.residuals[0] < 1e-10);
  CHECK_FALSE(r.continuum_detected);
}

TEST_CASE("search: sl2 gives E1 and the normal of the opposite Borel subalgebra")
{
  for (double a : {0.5, 1.0, 2.0})
    for (double b : {0.5, 1.0, 2.0}) {
      const MetricLieAlgebra M = sl2_algebra(a, b);
      const SearchResult r = search_tg_hyperplanes(M);
      const Vector other = Eigen::Vector3d(1.0, 2 * b / a, 0.0).normalized();
      CHECK(r.normals.size() == 2);
      CHECK(contains_up_to_sign(r.normals, Vector::Unit(3, 0), 1e-8));
      CHECK(contains_up_to_sign(r.normals, other, 1e-8));
      for (const Vector & T : r.normals) {
        CHECK(hyperplane_tg_residual(M, T) < 1e-10);
        CHECK(oracle::hyperplane_entry_residual(oracle::from(M), T) < 1e-10);
      }
    }
}

TEST_CASE("search: abelian algebras report a continuum")
{
  const SearchResult r = search_tg_hyperplanes(abelian_algebra(3));
  CHECK(r.continuum_detected);
  CHECK(r.normals.size() > 20);
}

TEST_CASE("search: heisenberg algebra has no TG hyperplanes")
{
  const SearchResult r = search_tg_hyperplanes(heisenberg_algebra());
  CHECK(r.normals.empty());
}

TEST_CASE("search: deterministic for a fixed seed")
{
  Tolerances tol;
  tol.seed = 12345;
  const MetricLieAlgebra M = orthogonal_sum(sl2_algebra(1, 2), abelian_algebra(1));
  const SearchResult a = search_tg_hyperplanes(M, tol);
  const SearchResult b = search_tg_hyperplanes(M, tol);
  REQUIRE(a.normals.size() == b.normals.size());
  for (std::size_t i = 0; i < a.normals.size(); ++i) CHECK((a.normals[i] - b.normals[i]).norm() == 0.0);
  CHECK(a.converged_seeds == b.converged_seeds);
}

TEST_CASE("search: invariant under orthogonal basis changes")
{
  std::mt19937_64 rng(31);
  const MetricLieAlgebra N = nonhomo_algebra();
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix Q = oracle::random_orthogonal(rng, 4);
    const MetricLieAlgebra C = change_basis(N, Q);
    const SearchResult r = search_tg_hyperplanes(C);
    REQUIRE(r.normals.size() == 1);
    // new coordinates of Y are Q^T Y
    const Vector expected = Q.transpose() * Vector::Unit(4, 3);
    CHECK(contains_up_to_sign(r.normals, expected, 1e-7));
  }
}

TEST_CASE("hyperplane_objective: gradient agrees with central differences")
{
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  const MetricLieAlgebra M = nonhomo_algebra();
  for (int trial = 0; trial < 5; ++trial) {
    Vector t(4);
    for (int i = 0; i < 4; ++i) t(i) = g(rng);
    t.normalize();
    const ObjectiveValue v = hyperplane_objective(M, t);
    for (int i = 0; i < 4; ++i) {
      const double h = 1e-6;
      Vector tp = t, tm = t;
      tp(i) += h;
      tm(i) -= h;
      const double fd = (hyperplane_objective(M, tp).value - hyperplane_objective(M, tm).value) / (2 * h);
      CHECK(v.gradient(i) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
    }
  }
}
