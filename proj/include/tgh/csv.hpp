#pragma once

#include <ostream>
#include <vector>

#include "tgh/coord_metric.hpp"

namespace tgh {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

/// Header t,x1..xn,v1..vn then one row per sample.
void write_trajectory_csv(std::ostream & out, const GeodesicTrajectory & trajectory);

/// Header u1..um,residual then one row per grid point.
void write_residual_grid_csv(std::ostream & out, const std::vector<Vector> & points,
                             const std::vector<double> & residuals);

} // namespace tgh
