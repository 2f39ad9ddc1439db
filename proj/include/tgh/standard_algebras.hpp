#pragma once

#include "tgh/lie_algebra.hpp"

namespace tgh {

/// sl(2) in the orthonormal basis E1 = aN, E2 = 2b U, E3 = bH of the
/// defining representation (N the rotation generator, U strictly upper
/// triangular, H = diag(1, -1)). Constants come from matrix commutators.
/// Throws BadParams when a * b == 0.
MetricLieAlgebra sl2_algebra(double a, double b, const Tolerances & tol = {});

/// Orthonormal Z, X1, X2, Y with [Z,X1] = X1 + X2, [Z,X2] = -X1 + X2, [Z,Y] = 2Y.
MetricLieAlgebra nonhomo_algebra(const Tolerances & tol = {});

/// Orthonormal X, Y, Z with [X,Y] = Z.
MetricLieAlgebra heisenberg_algebra(const Tolerances & tol = {});

/// R^n with the identity Gram matrix.
MetricLieAlgebra abelian_algebra(int n, const Tolerances & tol = {});

/// Orthonormal Z, Y with [Z,Y] = cY: the hyperbolic plane of curvature -c^2.
MetricLieAlgebra hyperbolic_plane_algebra(double c = 1.0, const Tolerances & tol = {});

} // namespace tgh
