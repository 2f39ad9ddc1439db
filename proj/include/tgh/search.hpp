#pragma once

#include <vector>

#include "tgh/lie_algebra.hpp"

namespace tgh {

struct SearchResult
{
  /// Unit normals (input coordinates), one representative per +- pair,
  /// sign-normalized and sorted lexicographically.
  std::vector<Vector> normals;
  std::vector<double> residuals;   ///< hyperplane_tg_residual of each normal
  int converged_seeds = 0;         ///< seeds whose polished residual passed
  /// More than Tolerances::continuum_count well-separated passing minima:
  /// the TG normals form a continuum and `normals` is only a sample.
  bool continuum_detected = false;
};

/// Multistart search for unit T whose orthogonal hyperplane distribution is
/// totally geodesic: Riemannian gradient descent of |P nabla(.)T P|_F^2 on
/// the unit sphere, followed by Gauss-Newton polishing. Uses
/// Tolerances::{seeds, seed, max_iterations, search_threshold, dedup_angle,
/// continuum_count}. Deterministic for a fixed seed regardless of the number
/// of worker threads.
SearchResult search_tg_hyperplanes(const MetricLieAlgebra & M, const Tolerances & tol = {});

/// The descent objective and its Euclidean gradient at a frame-coordinate
/// unit vector; exposed for testing.
struct ObjectiveValue
{
  double value = 0.0;
  Vector gradient;
};
ObjectiveValue hyperplane_objective(const MetricLieAlgebra & M, const Vector & frame_t);

} // namespace tgh
