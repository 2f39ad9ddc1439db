#pragma once

#include "tgh/products.hpp"

namespace tgh {

/// Flat R^n.
CoordinateMetric euclidean_metric(int n);

/// dr^2 + sinh^2(r) dtheta^2 on r > 0, coordinates (r, theta).
CoordinateMetric hyperbolic_polar_metric();

/// The curvature -1 plane in geodesic normal coordinates (x, y) about the
/// origin: g = I + q(rho) (rho I - u u^T), rho = |u|^2,
/// q = (sinh^2 r - rho) / rho^2. Regular at the origin.
CoordinateMetric hyperbolic_normal_metric();

/// dz^2 + e^{2z}(dx1^2 + dx2^2) + e^{4z} dy^2 in coordinates (z, x1, x2, y);
/// the left-invariant metric of nonhomo_algebra() with the identity at the origin.
CoordinateMetric nonhomo_metric();

/// Twisted product over the hyperbolic plane in normal coordinates with
/// alpha = r, beta = polar angle, k = 1 and the given kappa; anchor at the origin.
/// Throws BadParams for kappa == 0.
TwistedProductSpec twisted_h2_spec(double kappa);

} // namespace tgh
