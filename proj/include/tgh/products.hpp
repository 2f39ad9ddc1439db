#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tgh/coord_metric.hpp"

namespace tgh {

/// A smooth function on a chart together with its gradient (coordinate partials).
struct ScalarField
{
  std::function<double(const Vector &)> value;
  std::function<Vector(const Vector &)> gradient;
};

/// e^{2 logf(u)} (dv^1^2 + ... + dv^m^2) + base, in coordinates (v^1..v^m, u).
/// Exact partials are provided when the base has them.
CoordinateMetric build_warped_product(int m, const CoordinateMetric & base, const ScalarField & logf);

/// Data of a twisted product R x_f M2 with twisting function
/// f = e^{2 phi}, e^{-phi} = sinh(alpha) cos(kappa t + beta) + cosh(alpha).
struct TwistedProductSpec
{
  CoordinateMetric base;
  ScalarField alpha;
  ScalarField beta;
  double kappa = 1.0;
  double k = 1.0;
  Vector anchor;  ///< base point u0 with alpha(u0) = 0

  /// Throws BadParams unless kappa != 0, k > 0, alpha(anchor) = 0.
  void validate() const;
};

/// phi and its first two t-derivatives at (t, u).
struct PhiJet
{
  double phi = 0.0;
  double phi_t = 0.0;
  double phi_tt = 0.0;
};

/// Closed-form jet of phi = -log(sinh a cos(kappa t + b) + cosh a).
PhiJet twisting_jet(const TwistedProductSpec & spec, double t, const Vector & u);

/// e^{2 phi} dt^2 + base, coordinates (t, u). Exact partials come from the
/// alpha and beta gradients; at points where alpha is (numerically) zero the
/// polar angle beta is singular and the partials fall back to differences.
/// Throws MetricDegenerate if e^{-phi} <= 0 at a queried point.
CoordinateMetric build_twisted_product(const TwistedProductSpec & spec);

/// max over the grid of |d/dt (e^{-phi} phi_t^2 + kappa^2 (e^phi + e^{-phi}))|,
/// differentiated exactly from the supplied jet.
double twisting_ode_residual(const std::function<PhiJet(double, const Vector &)> & jet, double kappa,
                             const std::vector<double> & ts, const std::vector<Vector> & us);

/// Same, for the closed-form jet of `spec`.
double twisting_ode_residual(const TwistedProductSpec & spec, const std::vector<double> & ts,
                             const std::vector<Vector> & us);

struct EikonalResiduals
{
  double alpha_residual = 0.0;         ///< max | |grad alpha|^2 - k^2 |
  std::optional<double> beta_residual; ///< max | sinh^2(alpha) |grad beta|^2 - k^2 |; empty if no point had alpha > 0
  int skipped = 0;                     ///< points skipped for the beta residual
};

EikonalResiduals eikonal_residuals(const TwistedProductSpec & spec, const std::vector<Vector> & us);

} // namespace tgh
