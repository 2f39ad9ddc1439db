#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgh/helix.hpp"
#include "tgh/tg_analysis.hpp"

namespace tgh {

/// Which branch of the product / warped / twisted trichotomy a certified
/// totally geodesic normal falls into, read off the Frenet order of its orbit.
enum class CaseTag
{
  GeodesicNormal, ///< k1 = 0: Riemannian product candidate
  CircleNormal,   ///< k1 > 0, k2 = 0: warped product candidate
  HelixOrderTwo,  ///< k1, k2 > 0, k3 = 0: twisted product with an sl(2) quotient
  HigherOrder,    ///< k3 > 0: contradicts the classification
};

std::string to_string(CaseTag tag);

struct ClassificationReport
{
  CaseTag case_tag = CaseTag::GeodesicNormal;
  double tg_residual = 0.0;
  double codazzi_residual = 0.0;
  FrenetData frenet;
  std::optional<HelixWitness> witness;

  /// CircleNormal: the functional X -> <[X, T], T> = k1 <N1, X>, in the dual
  /// of the input basis, and its residual against [g, g].
  std::optional<Vector> character_hint;
  std::optional<double> character_residual;

  /// GeodesicNormal: the common curvature-operator eigenvalue of T ^ T^perp,
  /// when there is one.
  std::optional<double> eigenvalue_lambda;
  EigenBlockCheck eigen_block;

  std::vector<std::string> warnings;
};

/// Classifies a certified TG normal; throws NotTotallyGeodesic (with the
/// residual) when hyperplane_tg_residual(M, T) >= Tolerances::totally_geodesic.
ClassificationReport classify_case(const MetricLieAlgebra & M, const Vector & T, const Tolerances & tol = {});

} // namespace tgh
