#pragma once

#include <functional>
#include <vector>

#include "tgh/lie_algebra.hpp"

namespace tgh {

/// A Riemannian metric on a coordinate chart.
///
/// `gram_at` must return a symmetric positive definite matrix; `metric()`
/// checks this and throws MetricDegenerate otherwise. `partials_at`, when
/// set, returns the exact partials d g / d x^k (one matrix per k); without it
/// derivatives come from central differences with relative step `fd_step`
/// and one Richardson level.
struct CoordinateMetric
{
  using GramFn = std::function<Matrix(const Vector &)>;
  using PartialsFn = std::function<std::vector<Matrix>(const Vector &)>;

  int dim = 0;
  GramFn gram_at;
  PartialsFn partials_at;
  double fd_step = 1e-5;

  Matrix metric(const Vector & x) const;

  /// Exact partials when available (and not `force_fd`), else finite differences.
  std::vector<Matrix> partials(const Vector & x, bool force_fd = false) const;

  std::vector<Matrix> fd_partials(const Vector & x) const;
};

/// Gamma^k_ij stored as upper[k](i, j).
struct ChristoffelSymbols
{
  std::vector<Matrix> upper;

  int dim() const { return static_cast<int>(upper.size()); }
  double operator()(int k, int i, int j) const { return upper[k](i, j); }

  /// Gamma(u, v)^k = Gamma^k_ij u^i v^j.
  Vector contract(const Vector & u, const Vector & v) const;
};

enum class Derivatives
{
  Auto,             ///< exact partials if the metric has them
  FiniteDifference, ///< always central differences
};

ChristoffelSymbols christoffel(const CoordinateMetric & CM, const Vector & x, Derivatives mode = Derivatives::Auto);

/// lower(i,j,k,l) = <R(d_i, d_j) d_k, d_l>, R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
struct CoordinateCurvature
{
  int dim = 0;
  std::vector<double> lower;
  double operator()(int i, int j, int k, int l) const
  {
    return lower[((static_cast<std::size_t>(i) * dim + j) * dim + k) * dim + l];
  }
};

/// Riemann tensor from central differences (relative step
/// `curvature_fd_step`, one Richardson level) of the Christoffel symbols.
CoordinateCurvature coordinate_curvature(const CoordinateMetric & CM, const Vector & x, double relative_step = 1e-3);

/// Sectional curvature of span(u, v) at x.
double coordinate_sectional(const CoordinateMetric & CM, const Vector & x, const Vector & u, const Vector & v,
                            double relative_step = 1e-3);

struct GeodesicTrajectory
{
  std::vector<double> times;
  std::vector<Vector> points;
  std::vector<Vector> velocities;
  double step = 0.0;
  double max_speed_drift = 0.0; ///< max | |v|_g - |v0|_g | / |v0|_g
};

/// Fixed-step RK4 on x'' + Gamma(x', x') = 0. The step is shrunk so that an
/// integer number of steps covers `duration`. Throws InvalidArgument for a
/// zero initial speed, MetricDegenerate along the path and StepRejected when
/// the relative speed drift exceeds `max_drift`.
GeodesicTrajectory geodesic_integrate(const CoordinateMetric & CM, const Vector & x0, const Vector & v0,
                                      double duration, double step, double max_drift = 1e-4);

/// The hypersurface {value(x) = 0}.
struct LevelSetHypersurface
{
  std::function<double(const Vector &)> value;
  std::function<Vector(const Vector &)> gradient;
  std::function<Matrix(const Vector &)> hessian; ///< optional; differenced from `gradient` when empty
};

struct SecondFundamentalForm
{
  Matrix tangent_frame;    ///< columns d_a - (d_a h / d_p h) d_p, p the dominant gradient slot
  Matrix coordinate_form;  ///< h(V_a, V_b) on the tangent frame
  Matrix orthonormal_form; ///< the same form on a metric-orthonormalized tangent frame
  Vector unit_normal;      ///< xi = grad h / |grad h|_g, coordinates
  double max_norm = 0.0;   ///< largest |entry| of orthonormal_form
};

/// h(X, Y) = -<nabla_X Y, xi> = Hess h(X, Y) / |grad h|_g for tangent X, Y.
/// Throws InvalidArgument when |h(x)| >= surface_tol and GradientDegenerate
/// when the gradient is below gradient_floor.
SecondFundamentalForm second_fundamental_form(const CoordinateMetric & CM, const LevelSetHypersurface & H,
                                              const Vector & x, double surface_tol = 1e-10,
                                              double gradient_floor = 1e-8);

/// Central difference with one Richardson level, h = rel * max(1, |x_k|).
Vector richardson_derivative(const std::function<Vector(const Vector &)> & f, const Vector & x, int k, double rel);

} // namespace tgh
