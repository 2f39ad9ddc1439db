#pragma once

#include <vector>

#include "tgh/coord_metric.hpp"

namespace tgh {

/// Points of a curve at equally spaced parameter values.
struct SampledCurve
{
  std::vector<double> times;
  std::vector<Vector> points;
};

/// Samples c(t0 + i h), i = 0..count-1.
SampledCurve sample_curve(const std::function<Vector(double)> & c, double t0, double h, int count);

struct NumericFrenet
{
  int order = 0;
  std::vector<double> curvatures; ///< k_1..k_order, each >= the zero threshold
  std::vector<double> estimates;  ///< every computed k_i, including the first one below threshold
  std::vector<double> errors;     ///< |k_i(h) - k_i(2h)| for each estimate
  Matrix frame;                   ///< orthonormal Frenet vectors (coordinates), order + 1 columns
  double time = 0.0;              ///< parameter value of the evaluation sample
  double speed = 0.0;             ///< |c'|_g there; 1 when arclength is requested
};

/// Frenet data at the middle sample from nested fourth-order central
/// differences of the covariant derivatives V_1 = c', V_{j+1} = D_t V_j and
/// Gram-Schmidt of V_1, V_2, ... in the metric. The curvatures
/// k_i = h_{i+1} / (h_i h_1), h_j the Gram-Schmidt heights, do not depend on
/// the parameterization; `arclength` only rescales the reported speed.
/// Throws IrregularCurve for fewer than 50 samples or speed below 1e-8.
NumericFrenet frenet_numeric(const CoordinateMetric & CM, const SampledCurve & curve, bool arclength,
                             int p_max, double zero = 1e-6);

} // namespace tgh
