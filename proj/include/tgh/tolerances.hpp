#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace tgh {

/// Every numerical threshold used by the engines, with its default.
///
/// Operations take a `const Tolerances&` (defaulting to `Tolerances{}`), so a
/// caller can loosen or tighten a single gate without touching the others.
/// The CLI exposes each field through `--tol NAME=VALUE`.
struct Tolerances
{
  // lie_core
  double jacobi = 1e-9;           ///< max Jacobi cyclic-sum entry accepted at construction
  double antisymmetry = 1e-12;    ///< |c[i][j][k] + c[j][i][k]|
  double symmetry = 1e-12;        ///< |G - G^T| for Gram matrices
  double orthonormal = 1e-12;     ///< |P^T G P - I| for the cached frame
  double independence = 1e-10;    ///< smallest singular value of a subspace basis
  double degenerate_plane = 1e-12;///< sin^2 of the angle between two plane generators
  double unit = 1e-10;            ///< | |T| - 1 | for unit normals

  // tg_analysis
  double totally_geodesic = 1e-9; ///< certification threshold for subspaces and hyperplanes
  double frenet_zero = 1e-8;      ///< Frenet curvature counted as zero below this
  double frenet_warn = 1e-10;     ///< curvatures in [frenet_warn, frenet_zero) raise a warning
  double helix_table = 1e-9;      ///< bracket table of a helix witness
  double ideal = 1e-9;            ///< [g, I] inside I
  double sl2_table = 1e-8;        ///< bracket table accepted by sl2 recognition
  double character = 1e-10;       ///< rank cut-off for the derived algebra
  double eigen_block = 1e-8;      ///< 2-forms T^e_i as curvature operator eigenvectors
  double search_threshold = 1e-10;///< residual a search result must reach
  double dedup_angle = 1e-4;      ///< search results closer than this (radians) are merged
  int seeds = 64;
  int max_iterations = 400;
  int continuum_count = 20;
  std::uint64_t seed = 0;

  // coord_engine
  double fd_step = 1e-5;          ///< relative central-difference step
  double curvature_fd_step = 1e-3;///< relative step for differentiating Christoffel symbols
  double rk4_step = 1e-3;
  double speed_drift = 1e-4;      ///< relative speed drift that aborts an integration
  double gradient_floor = 1e-8;   ///< level-set gradients below this are degenerate
  double surface = 1e-10;         ///< |h(x)| accepted as "on the surface"
  double polar_exclusion = 1e-3;  ///< radius excluded around the twisted anchor on residual grids
  double frenet_numeric_zero = 1e-6; ///< numeric Frenet curvature counted as zero below this
  int grid = 50;

  /// Assigns a field by name; returns false for unknown names.
  bool set(const std::string & name, double value);

  /// All fields as name -> value, for reports.
  std::map<std::string, double> as_map() const;
};

} // namespace tgh
