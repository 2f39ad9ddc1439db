#include "tgh/coord_metric.hpp"

#include <cmath>
#include <sstream>

#include "tgh/errors.hpp"

namespace tgh {

Vector richardson_derivative(const std::function<Vector(const Vector &)> & f, const Vector & x, int k, double rel)
{
  const double h = rel * std::max(1.0, std::abs(x(k)));
  auto central = [&](double step) {
    Vector xp = x, xm = x;
    xp(k) += step;
    xm(k) -= step;
    return Vector((f(xp) - f(xm)) / (2.0 * step));
  };
  const Vector coarse = central(h);
  const Vector fine = central(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

Matrix CoordinateMetric::metric(const Vector & x) const
{
  if (x.size() != dim) {
    throw DimensionMismatch("point must have " + std::to_string(dim) + " coordinates");
  }
  Matrix g = gram_at(x);
  if (g.rows() != dim || g.cols() != dim || !g.allFinite()) {
    throw MetricDegenerate("metric evaluator returned a malformed matrix");
  }
  g = 0.5 * (g + g.transpose());
  Eigen::LLT<Matrix> llt(g);
  if (llt.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "metric is not positive definite at (" << x.transpose() << ")";
    throw MetricDegenerate(msg.str());
  }
  return g;
}

std::vector<Matrix> CoordinateMetric::fd_partials(const Vector & x) const
{
  auto flat = [this](const Vector & p) {
    const Matrix g = metric(p);
    return Vector(Eigen::Map<const Vector>(g.data(), g.size()));
  };
  std::vector<Matrix> out;
  for (int k = 0; k < dim; ++k) {
    const Vector d = richardson_derivative(flat, x, k, fd_step);
    Matrix m = Eigen::Map<const Matrix>(d.data(), dim, dim);
    out.push_back(0.5 * (m + m.transpose()));
  }
  return out;
}

std::vector<Matrix> CoordinateMetric::partials(const Vector & x, bool force_fd) const
{
  if (partials_at && !force_fd) {
    std::vector<Matrix> p = partials_at(x);
    if (static_cast<int>(p.size()) != dim) {
      throw DimensionMismatch("partials evaluator returned the wrong number of matrices");
    }
    return p;
  }
  return fd_partials(x);
}

Vector ChristoffelSymbols::contract(const Vector & u, const Vector & v) const
{
  const int n = dim();
  Vector out(n);
  for (int k = 0; k < n; ++k) out(k) = u.dot(upper[k] * v);
  return out;
}

ChristoffelSymbols christoffel(const CoordinateMetric & CM, const Vector & x, Derivatives mode)
{
  const int n = CM.dim;
  const Matrix g = CM.metric(x);
  const Matrix ginv = g.llt().solve(Matrix::Identity(n, n));
  const std::vector<Matrix> dg = CM.partials(x, mode == Derivatives::FiniteDifference);

  // first kind: [ij, l] = 1/2 (d_i g_jl + d_j g_il - d_l g_ij)
  std::vector<Matrix> first(n, Matrix::Zero(n, n));
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) first[l](i, j) = 0.5 * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));

  ChristoffelSymbols out;
  out.upper.assign(n, Matrix::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (ginv(k, l) != 0.0) out.upper[k] += ginv(k, l) * first[l];
    }
  return out;
}

CoordinateCurvature coordinate_curvature(const CoordinateMetric & CM, const Vector & x, double relative_step)
{
  const int n = CM.dim;
  const ChristoffelSymbols gamma = christoffel(CM, x);
  auto flat = [&](const Vector & p) {
    const ChristoffelSymbols c = christoffel(CM, p);
    Vector v(n * n * n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v((k * n + i) * n + j) = c(k, i, j);
    return v;
  };
  // dgamma[m]((k*n+i)*n+j) = d_m Gamma^k_ij
  std::vector<Vector> dgamma;
  for (int m = 0; m < n; ++m) dgamma.push_back(richardson_derivative(flat, x, m, relative_step));
  auto d = [&](int m, int k, int i, int j) { return dgamma[m]((k * n + i) * n + j); };

  // R^l_ijk
  std::vector<double> upper(static_cast<std::size_t>(n) * n * n * n, 0.0);
  auto U = [&](int i, int j, int k, int l) -> double & {
    return upper[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double r = d(i, l, j, k) - d(j, l, i, k);
          for (int m = 0; m < n; ++m) r += gamma(l, i, m) * gamma(m, j, k) - gamma(l, j, m) * gamma(m, i, k);
          U(i, j, k, l) = r;
        }

  const Matrix g = CM.metric(x);
  CoordinateCurvature out;
  out.dim = n;
  out.lower.assign(upper.size(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int m = 0; m < n; ++m) s += g(l, m) * U(i, j, k, m);
          out.lower[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l] = s;
        }
  return out;
}

double coordinate_sectional(const CoordinateMetric & CM, const Vector & x, const Vector & u, const Vector & v,
                            double relative_step)
{
  const int n = CM.dim;
  const CoordinateCurvature R = coordinate_curvature(CM, x, relative_step);
  const Matrix g = CM.metric(x);
  double num = 0.0;
  // <R(u,v)v, u>
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) num += u(i) * v(j) * v(k) * u(l) * R(i, j, k, l);
  const double uu = u.dot(g * u);
  const double vv = v.dot(g * v);
  const double uv = u.dot(g * v);
  const double area2 = uu * vv - uv * uv;
  if (!(area2 > 1e-12 * uu * vv)) {
    throw DegeneratePlane("sectional curvature requested for a degenerate plane");
  }
  return num / area2;
}

GeodesicTrajectory geodesic_integrate(const CoordinateMetric & CM, const Vector & x0, const Vector & v0,
                                      double duration, double step, double max_drift)
{
  if (x0.size() != CM.dim || v0.size() != CM.dim) {
    throw DimensionMismatch("initial point and velocity must have " + std::to_string(CM.dim) + " entries");
  }
  if (!(step > 0.0) || !(duration >= 0.0)) {
    throw InvalidArgument("geodesic integration needs a positive step and a nonnegative duration");
  }
  auto speed = [&](const Vector & x, const Vector & v) { return std::sqrt(v.dot(CM.metric(x) * v)); };
  const double speed0 = speed(x0, v0);
  if (!(speed0 > 0.0)) {
    throw InvalidArgument("initial velocity has zero length");
  }

  const long steps = std::max(1L, static_cast<long>(std::ceil(duration / step - 1e-9)));
  const double h = duration / static_cast<double>(steps);
  auto accel = [&](const Vector & x, const Vector & v) { return Vector(-christoffel(CM, x).contract(v, v)); };

  GeodesicTrajectory out;
  out.step = h;
  out.times.push_back(0.0);
  out.points.push_back(x0);
  out.velocities.push_back(v0);
  Vector x = x0, v = v0;
  for (long s = 1; s <= steps; ++s) {
    const Vector k1x = v, k1v = accel(x, v);
    const Vector k2x = v + 0.5 * h * k1v, k2v = accel(x + 0.5 * h * k1x, k2x);
    const Vector k3x = v + 0.5 * h * k2v, k3v = accel(x + 0.5 * h * k2x, k3x);
    const Vector k4x = v + h * k3v, k4v = accel(x + h * k3x, k4x);
    x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    const double drift = std::abs(speed(x, v) - speed0) / speed0;
    out.max_speed_drift = std::max(out.max_speed_drift, drift);
    if (drift > max_drift) {
      std::ostringstream msg;
      msg << "speed drift " << drift << " exceeds " << max_drift << " at t = " << s * h;
      throw StepRejected(msg.str());
    }
    out.times.push_back(s * h);
    out.points.push_back(x);
    out.velocities.push_back(v);
  }
  return out;
}

SecondFundamentalForm second_fundamental_form(const CoordinateMetric & CM, const LevelSetHypersurface & H,
                                              const Vector & x, double surface_tol, double gradient_floor)
{
  const int n = CM.dim;
  if (!(std::abs(H.value(x)) < surface_tol)) {
    throw InvalidArgument("point is not on the level set");
  }
  const Vector grad = H.gradient(x);
  if (grad.size() != n) throw DimensionMismatch("level-set gradient has wrong length");
  if (!(grad.norm() > gradient_floor)) {
    throw GradientDegenerate("level-set gradient vanishes at the query point");
  }
  Matrix hess;
  if (H.hessian) {
    hess = H.hessian(x);
  } else {
    hess.resize(n, n);
    for (int k = 0; k < n; ++k) hess.col(k) = richardson_derivative(H.gradient, x, k, CM.fd_step);
    hess = 0.5 * (hess + hess.transpose());
  }

  const Matrix g = CM.metric(x);
  const ChristoffelSymbols gamma = christoffel(CM, x);
  Matrix covariant_hess = hess;
  for (int k = 0; k < n; ++k) covariant_hess -= grad(k) * gamma.upper[k];

  const Vector raised = g.llt().solve(grad);
  const double grad_norm = std::sqrt(grad.dot(raised));

  int pivot = 0;
  grad.cwiseAbs().maxCoeff(&pivot);
  Matrix frame = Matrix::Zero(n, n - 1);
  for (int a = 0, col = 0; a < n; ++a) {
    if (a == pivot) continue;
    frame(a, col) = 1.0;
    frame(pivot, col) = -grad(a) / grad(pivot);
    ++col;
  }

  SecondFundamentalForm out;
  out.tangent_frame = frame;
  out.unit_normal = raised / grad_norm;
  out.coordinate_form = frame.transpose() * covariant_hess * frame / grad_norm;
  const Matrix induced = frame.transpose() * g * frame;
  Eigen::LLT<Matrix> llt(induced);
  const Matrix Linv = Matrix(llt.matrixL()).inverse();
  out.orthonormal_form = Linv * out.coordinate_form * Linv.transpose();
  out.max_norm = out.orthonormal_form.size() ? out.orthonormal_form.cwiseAbs().maxCoeff() : 0.0;
  return out;
}

} // namespace tgh
