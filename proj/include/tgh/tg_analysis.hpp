#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgh/curvature.hpp"
#include "tgh/lie_algebra.hpp"

namespace tgh {

/// Outcome of testing a subspace for being a totally geodesic subalgebra.
struct SubspaceCheck
{
  bool totally_geodesic = false;
  double residual = 0.0;            ///< max of the two residuals below
  double bracket_residual = 0.0;    ///< max |[X,Y] normal to S| over ONB pairs
  double connection_residual = 0.0; ///< max |nabla_X Y normal to S| over ONB pairs

  /// The ONB pair with the largest bracket leak (indices into the
  /// orthonormalized generators) and the leaking normal component
  /// (input coordinates). Present only when bracket_residual > 0.
  struct Witness
  {
    int first = 0;
    int second = 0;
    Vector normal_component;
  };
  std::optional<Witness> witness;
};

SubspaceCheck tg_subspace_check(const MetricLieAlgebra & M, const Subspace & S,
                                const Tolerances & tol = {});

/// Operator norm of the bilinear form (X, Y) -> <nabla_X Y, T> on T^perp.
/// Zero exactly when the left-invariant distribution T^perp is integrable
/// with totally geodesic leaves. Throws NonUnitVector.
double hyperplane_tg_residual(const MetricLieAlgebra & M, const Vector & T, const Tolerances & tol = {});

/// Frobenius norm of (X,Y,Z) -> <R(X,Y)Z, T> restricted to T^perp.
double codazzi_residual(const MetricLieAlgebra & M, const Vector & T, const Tolerances & tol = {});

/// Linear functionals vanishing on [g, g].
struct CharacterSpace
{
  Matrix basis;         ///< rows are functionals in the dual of the input basis
  int derived_dim = 0;  ///< dim [g, g]
  int dim() const { return static_cast<int>(basis.rows()); }
};

CharacterSpace character_space(const LieAlgebra & L, const Tolerances & tol = {});

/// Frenet apparatus of the orbit of a left-invariant unit field T through the
/// identity. The curvatures are constant along the orbit.
struct FrenetData
{
  int order = 0;                   ///< number of nonzero curvatures
  std::vector<double> curvatures;  ///< k_1 .. k_order
  Matrix frame;                    ///< columns eps_1 .. eps_{order+1}, input coordinates
  double truncation_residual = 0.0;///< the first curvature counted as zero (or not computed)
  double recursion_residual = 0.0;
  double orthonormality_residual = 0.0;
  bool near_zero_warning = false;  ///< a curvature fell in [frenet_warn, frenet_zero)
};

/// Iterates w_s = nabla_T eps_s + k_{s-1} eps_{s-1}, k_s = |w_s| until
/// k_s < frenet_zero or s = p_max. Throws NonUnitVector.
FrenetData frenet_orbit(const MetricLieAlgebra & M, const Vector & T, int p_max,
                        const Tolerances & tol = {});

/// max over basis X of |<T, [X, T]> - k_1 <N_1, X>| (0 when order is 0:
/// then <T, [X, T]> itself is reported).
double first_normal_residual(const MetricLieAlgebra & M, const FrenetData & F);

/// |N_2 - k_2^{-1}([T, N_1] + k_1 T)|; requires order >= 2.
double second_normal_residual(const MetricLieAlgebra & M, const FrenetData & F);

/// Checks that the 2-forms T ^ e_i, with e_i an eigenbasis of the Jacobi
/// operator R_T on T^perp, are eigenvectors of the curvature operator.
struct EigenBlockCheck
{
  std::vector<double> eigenvalues;  ///< curvature operator eigenvalue of each T ^ e_i
  double eigenvector_residual = 0.0;///< max |R(T^e) - lambda T^e|
  double spectrum_residual = 0.0;   ///< distance of each lambda to the operator spectrum
  std::optional<double> common_eigenvalue; ///< set when T ^ T^perp sits in one eigenspace
};

EigenBlockCheck eigen_block_check(const MetricLieAlgebra & M, const Vector & T, const Tolerances & tol = {});

} // namespace tgh
