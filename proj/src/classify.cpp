#include "tgh/classify.hpp"

#include <sstream>

#include "tgh/errors.hpp"

namespace tgh {

std::string to_string(CaseTag tag)
{
  switch (tag) {
    case CaseTag::GeodesicNormal: return "GeodesicNormal";
    case CaseTag::CircleNormal: return "CircleNormal";
    case CaseTag::HelixOrderTwo: return "HelixOrderTwo";
    case CaseTag::HigherOrder: return "HigherOrder";
  }
  return "Unknown";
}

ClassificationReport classify_case(const MetricLieAlgebra & M, const Vector & T, const Tolerances & tol)
{
  ClassificationReport report;
  report.tg_residual = hyperplane_tg_residual(M, T, tol);
  if (!(report.tg_residual < tol.totally_geodesic)) {
    std::ostringstream msg;
    msg << "T^perp is not a totally geodesic distribution: residual " << report.tg_residual;
    throw NotTotallyGeodesic(msg.str(), report.tg_residual);
  }
  report.codazzi_residual = codazzi_residual(M, T, tol);
  report.frenet = frenet_orbit(M, T, M.dim() - 1, tol);
  report.eigen_block = eigen_block_check(M, T, tol);
  if (report.frenet.near_zero_warning) {
    report.warnings.push_back("a Frenet curvature lies between frenet_warn and frenet_zero");
  }

  switch (report.frenet.order) {
    case 0:
      report.case_tag = CaseTag::GeodesicNormal;
      report.eigenvalue_lambda = report.eigen_block.common_eigenvalue;
      break;
    case 1: {
      report.case_tag = CaseTag::CircleNormal;
      const Vector hint = report.frenet.curvatures[0] * (M.gram() * report.frenet.frame.col(1));
      const int n = M.dim();
      double residual = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          residual = std::max(residual, std::abs(hint.dot(M.algebra().constants().bracket_of_basis(i, j))));
      report.character_hint = hint;
      report.character_residual = residual;
      if (residual > tol.character) {
        report.warnings.push_back("the warping functional does not vanish on [g, g]");
      }
      break;
    }
    case 2:
      report.case_tag = CaseTag::HelixOrderTwo;
      report.witness = helix_witness(M, T, tol);
      break;
    default:
      report.case_tag = CaseTag::HigherOrder;
      report.warnings.push_back("Frenet order above two for a totally geodesic normal");
      break;
  }
  return report;
}

} // namespace tgh
