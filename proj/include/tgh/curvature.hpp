#pragma once

#include <vector>

#include "tgh/lie_algebra.hpp"

namespace tgh {

/// Levi-Civita connection of a left-invariant metric in the orthonormal frame
/// E_a of a MetricLieAlgebra: nabla_{E_i} E_j = sum_k gamma(i, j, k) E_k.
class ConnectionTable
{
public:
  explicit ConnectionTable(std::vector<Matrix> operators);

  int dim() const { return static_cast<int>(m_ops.size()); }

  double gamma(int i, int j, int k) const { return m_ops[i](k, j); }

  /// nabla_{E_i} as a matrix acting on frame coordinates (skew-symmetric).
  const Matrix & covariant_operator(int i) const { return m_ops[i]; }

  /// nabla_X as a matrix, X in frame coordinates.
  Matrix covariant_operator(const Vector & x) const;

  /// nabla_X Y for left-invariant X, Y (frame coordinates).
  Vector covariant(const Vector & x, const Vector & y) const;

  /// max |gamma(i,j,k) + gamma(i,k,j)|.
  double metric_residual() const;

  /// max |gamma(i,j,.) - gamma(j,i,.) - c(i,j,.)| against frame constants.
  double torsion_residual(const StructureConstants & frame_constants) const;

private:
  std::vector<Matrix> m_ops;
};

/// Index of the 2-form E_i ^ E_j (i < j) in lexicographic order.
int pair_index(int n, int i, int j);

/// Curvature of a left-invariant metric in the orthonormal frame.
///
/// component(i,j,k,l) = <R(E_i,E_j)E_k, E_l> with
/// R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y], so that the
/// sectional curvature is K(X,Y) = <R(X,Y)Y, X> for orthonormal X, Y.
///
/// The curvature operator is stored on the orthonormal basis E_i ^ E_j (i<j)
/// of 2-forms with the sign that makes a space of constant curvature c act as
/// c * Id: operator(ij, kl) = component(i,j,l,k).
class CurvatureData
{
public:
  CurvatureData(int dim, std::vector<double> components);

  int dim() const { return m_dim; }
  double component(int i, int j, int k, int l) const
  {
    return m_r[((static_cast<std::size_t>(i) * m_dim + j) * m_dim + k) * m_dim + l];
  }

  const Matrix & operator_matrix() const { return m_operator; }
  const Vector & eigenvalues() const { return m_eigenvalues; }
  const Matrix & eigenvectors() const { return m_eigenvectors; }

  /// R(x, y) z in frame coordinates.
  Vector apply(const Vector & x, const Vector & y, const Vector & z) const;

  /// Largest violation of the pair (anti)symmetries.
  double symmetry_residual() const;
  /// Largest first-Bianchi cyclic sum over (j,k,l).
  double bianchi_residual() const;
  /// max-norm of V diag(mu) V^T - operator.
  double reconstruction_residual() const;

private:
  int m_dim;
  std::vector<double> m_r;
  Matrix m_operator;
  Vector m_eigenvalues;
  Matrix m_eigenvectors;
};

struct CurvatureSpectrum
{
  Vector eigenvalues;  ///< ascending
  Matrix eigenvectors; ///< orthonormal columns in the E_i ^ E_j basis
};

ConnectionTable levi_civita(const MetricLieAlgebra & M);

CurvatureData curvature_tensor(const MetricLieAlgebra & M);

CurvatureSpectrum curvature_operator_eigen(const MetricLieAlgebra & M);

/// Sectional curvature of span(x, y), x and y in input coordinates.
/// Throws DegeneratePlane when sin^2 of their angle is below
/// Tolerances::degenerate_plane.
double sectional(const MetricLieAlgebra & M, const Vector & x, const Vector & y,
                 const Tolerances & tol = {});

/// Same, reusing an already computed curvature tensor.
double sectional(const MetricLieAlgebra & M, const CurvatureData & R, const Vector & x,
                 const Vector & y, const Tolerances & tol = {});

/// 2-form x ^ y (frame coordinates) in the E_i ^ E_j basis.
Vector wedge(const Vector & x, const Vector & y);

} // namespace tgh
