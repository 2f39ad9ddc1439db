#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tgh/csv.hpp"
#include "tgh/errors.hpp"
#include "tgh/standard_metrics.hpp"

using namespace tgh;

namespace {

Vector random_point(std::mt19937_64 & rng, int n, double lo, double hi)
{
  std::uniform_real_distribution<double> u(lo, hi);
  Vector p(n);
  for (int i = 0; i < n; ++i) p(i) = u(rng);
  return p;
}

double gap(const ChristoffelSymbols & a, const std::vector<Matrix> & b)
{
  double worst = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) worst = std::max(worst, (a.upper[k] - b[k]).cwiseAbs().maxCoeff());
  return worst;
}

/// Pull back of a metric by x = J x'.
CoordinateMetric linear_pullback(const CoordinateMetric & CM, const Matrix & J)
{
  CoordinateMetric out;
  out.dim = CM.dim;
  out.gram_at = [CM, J](const Vector & xp) { return Matrix(J.transpose() * CM.metric(J * xp) * J); };
  return out;
}

} // namespace

TEST_CASE("christoffel: Euclidean symbols vanish")
{
  const ChristoffelSymbols c = christoffel(euclidean_metric(3), Vector::Ones(3));
  for (const Matrix & m : c.upper) CHECK(m.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("christoffel: nonhomogeneous metric reference values")
{
  const CoordinateMetric CM = nonhomo_metric();
  for (double z : {-0.4, 0.0, 0.7}) {
    Vector x = Vector::Zero(4);
    x(0) = z;
    x(2) = 0.3;
    const ChristoffelSymbols c = christoffel(CM, x);
    CHECK(c(0, 3, 3) == doctest::Approx(-2 * std::exp(4 * z)).epsilon(1e-13));
    CHECK(c(3, 0, 3) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(c(1, 0, 1) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(c(1, 1, 0) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("christoffel: hyperbolic polar reference values and diagonal oracle")
{
  const CoordinateMetric CM = hyperbolic_polar_metric();
  for (double r : {0.3, 1.0, 2.0}) {
    const Vector x = Eigen::Vector2d(r, 0.4);
    const ChristoffelSymbols c = christoffel(CM, x);
    CHECK(c(0, 1, 1) == doctest::Approx(-std::sinh(r) * std::cosh(r)).epsilon(1e-13));
    CHECK(c(1, 0, 1) == doctest::Approx(1.0 / std::tanh(r)).epsilon(1e-13));
    CHECK(c(1, 0, 0) == 0.0);
    const double s2 = std::sinh(r) * std::sinh(r);
    const std::vector<Matrix> ref =
      oracle::diagonal_christoffel(Eigen::Vector2d(1.0, s2), {Eigen::Vector2d(0.0, std::sinh(2 * r)), Eigen::Vector2d(0.0, 0.0)});
    CHECK(gap(c, ref) < 1e-13);
  }
}

TEST_CASE("christoffel: exact and finite-difference paths agree on built-ins")
{
  std::mt19937_64 rng(1);
  const std::vector<std::pair<CoordinateMetric, std::pair<double, double>>> metrics{
    {euclidean_metric(3), {-1.0, 1.0}},
    {hyperbolic_polar_metric(), {0.1, 1.0}},
    {hyperbolic_normal_metric(), {-1.0, 1.0}},
    {nonhomo_metric(), {0.0, 1.0}},
    {build_twisted_product(twisted_h2_spec(2.0)), {-0.7, 0.7}},
  };
  for (const auto & [CM, box] : metrics) {
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      const Vector x = random_point(rng, CM.dim, box.first, box.second);
      const ChristoffelSymbols a = christoffel(CM, x, Derivatives::Auto);
      const ChristoffelSymbols b = christoffel(CM, x, Derivatives::FiniteDifference);
      worst = std::max(worst, gap(a, b.upper));
      for (int k = 0; k < CM.dim; ++k) CHECK((a.upper[k] - a.upper[k].transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("hyperbolic normal coordinates: exact partials near the origin and curvature -1")
{
  const CoordinateMetric CM = hyperbolic_normal_metric();
  for (double r : {0.0, 1e-4, 0.05, 0.0999, 0.1001, 0.8}) {
    const Vector x = Eigen::Vector2d(r * 0.6, -r * 0.8);
    const std::vector<Matrix> exact = CM.partials(x);
    const std::vector<Matrix> fd = CM.fd_partials(x);
    for (int k = 0; k < 2; ++k) CHECK((exact[k] - fd[k]).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(coordinate_sectional(CM, x, Vector::Unit(2, 0), Vector::Unit(2, 1)) == doctest::Approx(-1.0).epsilon(1e-7));
  }
  // radial distance: g(u, u) = 1 for the unit radial vector
  const Vector p = Eigen::Vector2d(0.3, 0.4);
  CHECK(p.normalized().dot(CM.metric(p) * p.normalized()) == doctest::Approx(1.0).epsilon(1e-14));
  const Vector t = Eigen::Vector2d(-0.4, 0.3).normalized();
  CHECK(t.dot(CM.metric(p) * t) == doctest::Approx(std::pow(std::sinh(0.5) / 0.5, 2)).epsilon(1e-13));
}

TEST_CASE("metric: degenerate Gram matrices are rejected")
{
  CoordinateMetric CM;
  CM.dim = 2;
  CM.gram_at = [](const Vector & x) { return Matrix(Eigen::Vector2d(1.0, x(0)).asDiagonal()); };
  CHECK_NOTHROW(CM.metric(Eigen::Vector2d(1.0, 0.0)));
  CHECK_THROWS_AS(CM.metric(Eigen::Vector2d(-1.0, 0.0)), MetricDegenerate);
  CHECK_THROWS_AS(christoffel(CM, Eigen::Vector2d(0.0, 0.0)), MetricDegenerate);
}

TEST_CASE("geodesic_integrate: straight lines, coordinate axis, radial lines")
{
  const CoordinateMetric E = euclidean_metric(3);
  const Vector x0 = Eigen::Vector3d(0.1, -0.2, 0.3), v0 = Eigen::Vector3d(1.0, 2.0, -0.5);
  const GeodesicTrajectory g = geodesic_integrate(E, x0, v0, 1.5, 1e-2);
  for (std::size_t s = 0; s < g.times.size(); ++s) CHECK((g.points[s] - x0 - g.times[s] * v0).cwiseAbs().maxCoeff() < 1e-12);

  const GeodesicTrajectory z = geodesic_integrate(nonhomo_metric(), Vector::Zero(4), Vector::Unit(4, 0), 2.0, 1e-3);
  CHECK(z.times.back() == doctest::Approx(2.0));
  for (std::size_t s = 0; s < z.times.size(); ++s) {
    Vector d = z.points[s];
    d(0) -= z.times[s];
    CHECK(d.cwiseAbs().maxCoeff() < 1e-8);
  }

  const GeodesicTrajectory r =
    geodesic_integrate(hyperbolic_polar_metric(), Eigen::Vector2d(0.5, 1.2), Eigen::Vector2d(1.0, 0.0), 1.0, 1e-3);
  for (const Vector & p : r.points) CHECK(std::abs(p(1) - 1.2) < 1e-10);
}

TEST_CASE("geodesic_integrate: fourth-order convergence and energy conservation")
{
  const CoordinateMetric H = hyperbolic_polar_metric();
  const Vector x0 = Eigen::Vector2d(1.0, 0.0), v0 = Eigen::Vector2d(0.3, 0.5);
  std::vector<Vector> ends;
  for (double h : {0.1, 0.05, 0.025}) ends.push_back(geodesic_integrate(H, x0, v0, 2.0, h, 1.0).points.back());
  const double ratio = (ends[0] - ends[1]).norm() / (ends[1] - ends[2]).norm();
  CHECK(ratio > 8.0);
  CHECK(ratio < 32.0);

  const std::vector<std::pair<CoordinateMetric, Vector>> cases{
    {hyperbolic_polar_metric(), Eigen::Vector2d(1.0, 0.2)},
    {hyperbolic_normal_metric(), Eigen::Vector2d(0.2, 0.1)},
    {nonhomo_metric(), Eigen::Vector4d(0.1, 0.2, 0.3, 0.4)},
    {build_twisted_product(twisted_h2_spec(1.0)), Eigen::Vector3d(0.0, 0.2, 0.1)},
  };
  for (const auto & [CM, x] : cases) {
    const GeodesicTrajectory g = geodesic_integrate(CM, x, Vector::Ones(CM.dim) * 0.5, 1.0, 1e-3);
    CHECK(g.max_speed_drift < 1e-6);
  }
}

TEST_CASE("geodesic_integrate: errors")
{
  const CoordinateMetric H = hyperbolic_polar_metric();
  CHECK_THROWS_AS(geodesic_integrate(H, Eigen::Vector2d(1.0, 0.0), Vector::Zero(2), 1.0, 1e-3), InvalidArgument);
  CHECK_THROWS_AS(geodesic_integrate(H, Eigen::Vector2d(1.0, 0.0), Eigen::Vector2d(0.3, 2.0), 3.0, 0.5), StepRejected);
  CHECK_THROWS_AS(geodesic_integrate(H, Eigen::Vector3d(1.0, 0.0, 0.0), Eigen::Vector2d(1.0, 0.0), 1.0, 1e-3),
                  DimensionMismatch);
}

TEST_CASE("second_fundamental_form: hyperplanes, spheres, the x1 = 0 leaf")
{
  const LevelSetHypersurface plane{[](const Vector & x) { return x(0); },
                                   [](const Vector & x) { return Vector(Vector::Unit(x.size(), 0)); }, {}};
  CHECK(second_fundamental_form(euclidean_metric(3), plane, Eigen::Vector3d(0.0, 0.4, -1.0)).max_norm < 1e-12);

  for (double R : {0.5, 2.0}) {
    const LevelSetHypersurface sphere{[R](const Vector & x) { return x.squaredNorm() - R * R; },
                                      [](const Vector & x) { return Vector(2.0 * x); },
                                      [](const Vector & x) { return Matrix(2.0 * Matrix::Identity(x.size(), x.size())); }};
    const Vector x = R * Eigen::Vector3d(0.48, 0.6, 0.64);
    const SecondFundamentalForm f = second_fundamental_form(euclidean_metric(3), sphere, x);
    CHECK(f.max_norm == doctest::Approx(1.0 / R).epsilon(1e-12));
    const Matrix induced = f.tangent_frame.transpose() * f.tangent_frame;
    CHECK((f.coordinate_form - induced / R).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((f.orthonormal_form - Matrix::Identity(2, 2) / R).cwiseAbs().maxCoeff() < 1e-12);
  }

  const LevelSetHypersurface leaf{[](const Vector & x) { return x(1); },
                                  [](const Vector &) { return Vector(Vector::Unit(4, 1)); }, {}};
  std::mt19937_64 rng(5);
  for (int s = 0; s < 20; ++s) {
    Vector x = random_point(rng, 4, 0.0, 1.0);
    x(1) = 0.0;
    CHECK(second_fundamental_form(nonhomo_metric(), leaf, x).max_norm < 1e-8);
  }
}

TEST_CASE("second_fundamental_form: errors")
{
  const LevelSetHypersurface flat{[](const Vector & x) { return x(0) * x(0); },
                                  [](const Vector & x) { return Vector(2.0 * x(0) * Vector::Unit(2, 0)); }, {}};
  CHECK_THROWS_AS(second_fundamental_form(euclidean_metric(2), flat, Vector::Zero(2)), GradientDegenerate);
  CHECK_THROWS_AS(second_fundamental_form(euclidean_metric(2), flat, Eigen::Vector2d(1.0, 0.0)), InvalidArgument);
}

TEST_CASE("second_fundamental_form: invariant under a linear recoordinatization")
{
  const CoordinateMetric CM = nonhomo_metric();
  Matrix J = Matrix::Identity(4, 4);
  J(1, 2) = 0.3; // x1 = x1' + 0.3 x2'
  const CoordinateMetric pulled = linear_pullback(CM, J);

  const LevelSetHypersurface leaf{[](const Vector & x) { return x(1); },
                                  [](const Vector &) { return Vector(Vector::Unit(4, 1)); }, {}};
  const LevelSetHypersurface leaf_p{[J](const Vector & xp) { return (J * xp)(1); },
                                    [J](const Vector &) { return Vector(J.transpose() * Vector::Unit(4, 1)); }, {}};
  // a curved hypersurface: z + x1^2 = 0.1
  const LevelSetHypersurface bowl{[](const Vector & x) { return x(0) + x(1) * x(1) - 0.1; },
                                  [](const Vector & x) { return Vector(Eigen::Vector4d(1.0, 2 * x(1), 0.0, 0.0)); },
                                  {}};
  const LevelSetHypersurface bowl_p{[J, bowl](const Vector & xp) { return bowl.value(J * xp); },
                                    [J, bowl](const Vector & xp) { return Vector(J.transpose() * bowl.gradient(J * xp)); },
                                    {}};
  std::mt19937_64 rng(13);
  for (int s = 0; s < 10; ++s) {
    Vector x = random_point(rng, 4, 0.0, 0.5);
    x(1) = 0.0;
    const Vector xp = J.inverse() * x;
    const double a = second_fundamental_form(CM, leaf, x).max_norm;
    const double b = second_fundamental_form(pulled, leaf_p, xp).max_norm;
    CHECK(std::abs(a - b) < 1e-7);

    x(1) = 0.2;
    x(0) = 0.1 - 0.04;
    const Vector yp = J.inverse() * x;
    const Matrix fa = second_fundamental_form(CM, bowl, x).orthonormal_form;
    const Matrix fb = second_fundamental_form(pulled, bowl_p, yp, 1e-10).orthonormal_form;
    const Vector ea = Eigen::SelfAdjointEigenSolver<Matrix>(fa).eigenvalues();
    const Vector eb = Eigen::SelfAdjointEigenSolver<Matrix>(fb).eigenvalues();
    CHECK((ea - eb).cwiseAbs().maxCoeff() < 1e-7);
    CHECK(ea.cwiseAbs().maxCoeff() > 0.1);
  }
}

TEST_CASE("csv: trajectory and residual grid layout")
{
  const GeodesicTrajectory g = geodesic_integrate(euclidean_metric(2), Eigen::Vector2d(0.0, 1.0),
                                                  Eigen::Vector2d(0.5, 0.0), 1.0, 0.5);
  std::ostringstream out;
  write_trajectory_csv(out, g);
  CHECK(out.str() == "t,x1,x2,v1,v2\n0,0,1,0.5,0\n0.5,0.25,1,0.5,0\n1,0.5,1,0.5,0\n");
  std::ostringstream grid;
  write_residual_grid_csv(grid, {Eigen::Vector2d(0.1, 0.2)}, {3e-17});
  CHECK(grid.str() == "u1,u2,residual\n0.1,0.2,3e-17\n");
  CHECK(format_double(0.1 + 0.2) == "0.30000000000000004");
  CHECK_THROWS_AS(write_residual_grid_csv(grid, {Eigen::Vector2d(0.1, 0.2)}, {}), DimensionMismatch);
}
