#include "tgh/csv.hpp"

#include <charconv>

#include "tgh/errors.hpp"

namespace tgh {

std::string format_double(double v)
{
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_trajectory_csv(std::ostream & out, const GeodesicTrajectory & trajectory)
{
  const int n = trajectory.points.empty() ? 0 : static_cast<int>(trajectory.points.front().size());
  out << "t";
  for (int i = 1; i <= n; ++i) out << ",x" << i;
  for (int i = 1; i <= n; ++i) out << ",v" << i;
  out << "\n";
  for (std::size_t s = 0; s < trajectory.times.size(); ++s) {
    out << format_double(trajectory.times[s]);
    for (int i = 0; i < n; ++i) out << ',' << format_double(trajectory.points[s](i));
    for (int i = 0; i < n; ++i) out << ',' << format_double(trajectory.velocities[s](i));
    out << "\n";
  }
}

void write_residual_grid_csv(std::ostream & out, const std::vector<Vector> & points,
                             const std::vector<double> & residuals)
{
  if (points.size() != residuals.size()) throw DimensionMismatch("one residual per grid point expected");
  const int m = points.empty() ? 0 : static_cast<int>(points.front().size());
  for (int i = 1; i <= m; ++i) out << 'u' << i << ',';
  out << "residual\n";
  for (std::size_t s = 0; s < points.size(); ++s) {
    for (int i = 0; i < m; ++i) out << format_double(points[s](i)) << ',';
    out << format_double(residuals[s]) << "\n";
  }
}

} // namespace tgh
