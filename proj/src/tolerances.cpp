#include "tgh/tolerances.hpp"

namespace tgh {

namespace {

template<typename F>
void visit_fields(Tolerances & t, F && f)
{
  f("jacobi", t.jacobi);
  f("antisymmetry", t.antisymmetry);
  f("symmetry", t.symmetry);
  f("orthonormal", t.orthonormal);
  f("independence", t.independence);
  f("degenerate_plane", t.degenerate_plane);
  f("unit", t.unit);
  f("totally_geodesic", t.totally_geodesic);
  f("frenet_zero", t.frenet_zero);
  f("frenet_warn", t.frenet_warn);
  f("helix_table", t.helix_table);
  f("ideal", t.ideal);
  f("sl2_table", t.sl2_table);
  f("character", t.character);
  f("eigen_block", t.eigen_block);
  f("search_threshold", t.search_threshold);
  f("dedup_angle", t.dedup_angle);
  f("seeds", t.seeds);
  f("max_iterations", t.max_iterations);
  f("continuum_count", t.continuum_count);
  f("seed", t.seed);
  f("fd_step", t.fd_step);
  f("curvature_fd_step", t.curvature_fd_step);
  f("rk4_step", t.rk4_step);
  f("speed_drift", t.speed_drift);
  f("gradient_floor", t.gradient_floor);
  f("surface", t.surface);
  f("polar_exclusion", t.polar_exclusion);
  f("frenet_numeric_zero", t.frenet_numeric_zero);
  f("grid", t.grid);
}

} // namespace

bool Tolerances::set(const std::string & name, double value)
{
  bool found = false;
  visit_fields(*this, [&](const char * key, auto & field) {
    if (name == key) {
      field = static_cast<std::remove_reference_t<decltype(field)>>(value);
      found = true;
    }
  });
  return found;
}

std::map<std::string, double> Tolerances::as_map() const
{
  std::map<std::string, double> out;
  Tolerances copy = *this;
  visit_fields(copy, [&](const char * key, auto & field) { out[key] = static_cast<double>(field); });
  return out;
}

} // namespace tgh
