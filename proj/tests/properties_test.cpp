#include <doctest.h>

#include "property_sweep.hpp"
#include "tgh/lie_algebra.hpp"
#include "tgh/standard_algebras.hpp"

using namespace tgh;

TEST_CASE("properties: random bases and inner products on every catalog algebra")
{
  const sweep::Worst w = sweep::run(100);
  CHECK(w.variants == 2 * 100 * static_cast<int>(sweep::catalog_algebras().size()));
  CHECK(w.torsion < 1e-12);
  CHECK(w.metric < 1e-12);
  CHECK(w.symmetry < 1e-10);
  CHECK(w.bianchi < 1e-10);
  CHECK(w.codazzi < 1e-9);
  CHECK(w.first_normal < 1e-9);
  CHECK(w.second_normal < 1e-9);
  CHECK(w.spectrum_shift < 1e-10);
  CHECK(w.oracle_spectrum < 1e-10);
  CHECK(w.normals > 0);
}

TEST_CASE("properties: brackets and inner products transform covariantly")
{
  std::mt19937_64 rng(99);
  const MetricLieAlgebra M = nonhomo_algebra();
  for (int t = 0; t < 20; ++t) {
    Matrix C = oracle::random_spd(rng, 4);
    const MetricLieAlgebra N = change_basis(M, C);
    const Vector x = Vector::Random(4), y = Vector::Random(4);
    CHECK((C * N.bracket(x, y) - M.bracket(C * x, C * y)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(N.inner(x, y) - M.inner(C * x, C * y)) < 1e-12);
    CHECK(std::abs(sectional(N, x, y) - sectional(M, C * x, C * y)) < 1e-10);
  }
}
