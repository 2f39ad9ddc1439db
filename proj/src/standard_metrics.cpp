#include "tgh/standard_metrics.hpp"

#include <cmath>

#include "tgh/errors.hpp"

namespace tgh {

namespace {

/// q(rho) = (sinh^2 r - rho) / rho^2 and dq/drho.
std::pair<double, double> hyperbolic_q(double rho)
{
  if (rho < 1e-2) {
    const double q = 1.0 / 3 + rho * (2.0 / 45 + rho * (1.0 / 315 + rho * (2.0 / 14175 + rho * 2.0 / 467775)));
    const double dq = 2.0 / 45 + rho * (2.0 / 315 + rho * (6.0 / 14175 + rho * 8.0 / 467775));
    return {q, dq};
  }
  const double r = std::sqrt(rho);
  const double s = std::sinh(r) * std::sinh(r);
  const double ds = std::sinh(2.0 * r) / (2.0 * r);
  return {(s - rho) / (rho * rho), (ds - 1.0) / (rho * rho) - 2.0 * (s - rho) / (rho * rho * rho)};
}

} // namespace

CoordinateMetric euclidean_metric(int n)
{
  if (n < 1) throw BadParams("euclidean metric needs n >= 1");
  CoordinateMetric out;
  out.dim = n;
  out.gram_at = [n](const Vector &) { return Matrix(Matrix::Identity(n, n)); };
  out.partials_at = [n](const Vector &) { return std::vector<Matrix>(n, Matrix::Zero(n, n)); };
  return out;
}

CoordinateMetric hyperbolic_polar_metric()
{
  CoordinateMetric out;
  out.dim = 2;
  out.gram_at = [](const Vector & x) {
    const double s = std::sinh(x(0));
    return Matrix(Eigen::Vector2d(1.0, s * s).asDiagonal());
  };
  out.partials_at = [](const Vector & x) {
    std::vector<Matrix> d(2, Matrix::Zero(2, 2));
    d[0](1, 1) = std::sinh(2.0 * x(0));
    return d;
  };
  return out;
}

CoordinateMetric hyperbolic_normal_metric()
{
  CoordinateMetric out;
  out.dim = 2;
  out.gram_at = [](const Vector & u) {
    const double rho = u.squaredNorm();
    const double q = hyperbolic_q(rho).first;
    return Matrix(Matrix::Identity(2, 2) + q * (rho * Matrix::Identity(2, 2) - u * u.transpose()));
  };
  out.partials_at = [](const Vector & u) {
    const double rho = u.squaredNorm();
    const auto [q, dq] = hyperbolic_q(rho);
    const Matrix P = rho * Matrix::Identity(2, 2) - u * u.transpose();
    std::vector<Matrix> d(2);
    for (int k = 0; k < 2; ++k) {
      Matrix e = Matrix::Zero(2, 1);
      e(k) = 1.0;
      const Matrix dP = 2.0 * u(k) * Matrix::Identity(2, 2) - e * u.transpose() - u * e.transpose();
      d[k] = 2.0 * u(k) * dq * P + q * dP;
    }
    return d;
  };
  return out;
}

CoordinateMetric nonhomo_metric()
{
  CoordinateMetric out;
  out.dim = 4;
  out.gram_at = [](const Vector & x) {
    const double e2 = std::exp(2.0 * x(0));
    return Matrix(Eigen::Vector4d(1.0, e2, e2, e2 * e2).asDiagonal());
  };
  out.partials_at = [](const Vector & x) {
    const double e2 = std::exp(2.0 * x(0));
    std::vector<Matrix> d(4, Matrix::Zero(4, 4));
    d[0].diagonal() = Eigen::Vector4d(0.0, 2.0 * e2, 2.0 * e2, 4.0 * e2 * e2);
    return d;
  };
  return out;
}

TwistedProductSpec twisted_h2_spec(double kappa)
{
  if (!(kappa != 0.0)) throw BadParams("twisted-h2 needs kappa != 0");
  TwistedProductSpec spec;
  spec.base = hyperbolic_normal_metric();
  spec.alpha.value = [](const Vector & u) { return u.norm(); };
  spec.alpha.gradient = [](const Vector & u) {
    const double r = u.norm();
    return r > 0.0 ? Vector(u / r) : Vector(Vector::Zero(2));
  };
  spec.beta.value = [](const Vector & u) { return std::atan2(u(1), u(0)); };
  spec.beta.gradient = [](const Vector & u) {
    const double rho = u.squaredNorm();
    return rho > 0.0 ? Vector(Eigen::Vector2d(-u(1), u(0)) / rho) : Vector(Vector::Zero(2));
  };
  spec.kappa = kappa;
  spec.k = 1.0;
  spec.anchor = Vector::Zero(2);
  spec.validate();
  return spec;
}

} // namespace tgh
