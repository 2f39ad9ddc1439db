#include "tgh/frenet_numeric.hpp"

#include <cmath>
#include <sstream>

#include "tgh/errors.hpp"

namespace tgh {

SampledCurve sample_curve(const std::function<Vector(double)> & c, double t0, double h, int count)
{
  SampledCurve out;
  for (int i = 0; i < count; ++i) {
    const double t = t0 + i * h;
    out.times.push_back(t);
    out.points.push_back(c(t));
  }
  return out;
}

namespace {

struct Heights
{
  std::vector<double> h;
  Matrix frame;
};

/// Gram-Schmidt heights of V_1..V_L at the central sample, using samples
/// center + stride * m.
Heights heights_at(const CoordinateMetric & CM, const SampledCurve & curve, int center, int stride, double step,
                   int levels)
{
  const int reach = 2 * levels;
  std::vector<int> idx;
  for (int m = -reach; m <= reach; ++m) idx.push_back(center + stride * m);
  const int count = static_cast<int>(idx.size());

  auto ddt = [&](const std::vector<Vector> & f, int m) {
    return Vector((-f[m + 2] + 8.0 * f[m + 1] - 8.0 * f[m - 1] + f[m - 2]) / (12.0 * step));
  };

  std::vector<Vector> pts(count);
  for (int m = 0; m < count; ++m) pts[m] = curve.points[idx[m]];
  std::vector<Vector> vel(count);
  for (int m = 2; m < count - 2; ++m) vel[m] = ddt(pts, m);

  std::vector<std::vector<Vector>> V(levels, std::vector<Vector>(count));
  V[0] = vel;
  std::vector<ChristoffelSymbols> gamma(count);
  for (int m = 2; m < count - 2; ++m) gamma[m] = christoffel(CM, pts[m]);
  for (int j = 1; j < levels; ++j) {
    // V[j-1] is valid on [2j, count - 1 - 2j]
    for (int m = 2 * (j + 1); m < count - 2 * (j + 1); ++m) {
      V[j][m] = ddt(V[j - 1], m) + gamma[m].contract(vel[m], V[j - 1][m]);
    }
  }

  const int c = count / 2;
  const Matrix g = CM.metric(pts[c]);
  Heights out;
  out.frame.resize(CM.dim, 0);
  for (int j = 0; j < levels; ++j) {
    Vector w = V[j][c];
    for (int pass = 0; pass < 2; ++pass)
      for (int e = 0; e < out.frame.cols(); ++e) w -= out.frame.col(e).dot(g * w) * out.frame.col(e);
    const double height = std::sqrt(std::max(0.0, w.dot(g * w)));
    out.h.push_back(height);
    if (out.frame.cols() < CM.dim && height > 0.0) {
      out.frame.conservativeResize(Eigen::NoChange, out.frame.cols() + 1);
      out.frame.col(out.frame.cols() - 1) = w / height;
    }
  }
  return out;
}

} // namespace

NumericFrenet frenet_numeric(const CoordinateMetric & CM, const SampledCurve & curve, bool arclength, int p_max,
                             double zero)
{
  const int n = static_cast<int>(curve.points.size());
  if (n < 50 || static_cast<int>(curve.times.size()) != n) {
    throw IrregularCurve("numeric Frenet data needs at least 50 samples");
  }
  const double step = curve.times[1] - curve.times[0];
  if (!(step > 0.0)) throw IrregularCurve("sample times must increase");
  for (int i = 1; i < n; ++i) {
    if (std::abs(curve.times[i] - curve.times[i - 1] - step) > 1e-9 * std::max(1.0, std::abs(step))) {
      throw IrregularCurve("sample times must be equally spaced");
    }
  }
  const int levels = std::min(std::max(p_max, 0), CM.dim) + 1;
  const int center = n / 2;
  if (center - 4 * levels < 0 || center + 4 * levels >= n) {
    throw IrregularCurve("too few samples for the requested Frenet order");
  }

  const Heights fine = heights_at(CM, curve, center, 1, step, levels);
  const Heights coarse = heights_at(CM, curve, center, 2, 2.0 * step, levels);
  const double speed = fine.h[0];
  if (!(speed > 1e-8) || !(coarse.h[0] > 1e-8)) {
    std::ostringstream msg;
    msg << "curve speed " << speed << " is below 1e-8";
    throw IrregularCurve(msg.str());
  }

  NumericFrenet out;
  out.time = curve.times[center];
  out.speed = arclength ? 1.0 : speed;
  for (int i = 1; i < levels; ++i) {
    const double kf = fine.h[i - 1] > 0.0 ? fine.h[i] / (fine.h[i - 1] * fine.h[0]) : 0.0;
    const double kc = coarse.h[i - 1] > 0.0 ? coarse.h[i] / (coarse.h[i - 1] * coarse.h[0]) : 0.0;
    out.estimates.push_back(kf);
    out.errors.push_back(std::abs(kf - kc));
    if (kf < zero) break;
    out.curvatures.push_back(kf);
  }
  out.order = static_cast<int>(out.curvatures.size());
  out.frame = fine.frame.leftCols(std::min<int>(out.order + 1, fine.frame.cols()));
  return out;
}

} // namespace tgh
