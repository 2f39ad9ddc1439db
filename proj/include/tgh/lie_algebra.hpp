#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tgh/tolerances.hpp"

namespace tgh {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Structure constants c[i][j][k] of a real Lie algebra:
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
class StructureConstants
{
public:
  StructureConstants() = default;
  explicit StructureConstants(int dim);

  int dim() const { return m_dim; }

  double operator()(int i, int j, int k) const { return m_data[index(i, j, k)]; }
  double & operator()(int i, int j, int k) { return m_data[index(i, j, k)]; }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(int i, int j, const Vector & v);

  /// The coefficient vector of [e_i, e_j].
  Vector bracket_of_basis(int i, int j) const;

  /// Constants after the change of basis f_a = sum_i change(i, a) e_i.
  StructureConstants transformed(const Matrix & change) const;

private:
  std::size_t index(int i, int j, int k) const
  {
    return (static_cast<std::size_t>(i) * m_dim + j) * m_dim + k;
  }

  int m_dim = 0;
  std::vector<double> m_data;
};

/// A finite-dimensional real Lie algebra given by structure constants.
/// Construction rejects tensors that are not antisymmetric or violate the
/// Jacobi identity beyond `Tolerances::jacobi`; nothing is repaired.
class LieAlgebra
{
public:
  explicit LieAlgebra(StructureConstants constants, const Tolerances & tol = {});

  int dim() const { return m_constants.dim(); }
  const StructureConstants & constants() const { return m_constants; }

  Vector bracket(const Vector & x, const Vector & y) const;

  /// Matrix of ad_x in the same basis: ad(x) * y = [x, y].
  Matrix ad(const Vector & x) const;

private:
  StructureConstants m_constants;
};

/// max over basis triples of the sup-norm of the cyclic Jacobi sum.
double jacobi_residual(const StructureConstants & c);
inline double jacobi_residual(const LieAlgebra & L) { return jacobi_residual(L.constants()); }

/// A Lie algebra with an inner product, i.e. a Lie group with a
/// left-invariant metric (trivial isotropy).
///
/// Vectors passed to and returned from the public API are coordinates in the
/// *input* basis. The class also caches an orthonormal frame
/// E_a = sum_i onb_change(i, a) e_i; connection and curvature tensors live in
/// that frame ("frame coordinates").
class MetricLieAlgebra
{
public:
  MetricLieAlgebra(LieAlgebra algebra, Matrix gram, const Tolerances & tol = {});

  int dim() const { return m_algebra.dim(); }
  const LieAlgebra & algebra() const { return m_algebra; }
  const Matrix & gram() const { return m_gram; }
  const Matrix & onb_change() const { return m_change; }

  /// Structure constants in the orthonormal frame.
  const StructureConstants & frame_constants() const { return m_frame_constants; }

  /// Largest entry of |P^T G P - I|.
  double frame_residual() const { return m_frame_residual; }

  Vector to_frame(const Vector & x) const;
  Vector from_frame(const Vector & x) const;
  Matrix to_frame(const Matrix & columns) const;
  Matrix from_frame(const Matrix & columns) const;

  double inner(const Vector & x, const Vector & y) const;
  double norm(const Vector & x) const;

  Vector bracket(const Vector & x, const Vector & y) const { return m_algebra.bracket(x, y); }

  /// Bracket of frame-coordinate vectors, in frame coordinates.
  Vector frame_bracket(const Vector & x, const Vector & y) const;

private:
  LieAlgebra m_algebra;
  Matrix m_gram;
  Matrix m_change;
  Eigen::PartialPivLU<Matrix> m_change_lu;
  StructureConstants m_frame_constants;
  double m_frame_residual = 0.0;
};

/// bilinear extension of the structure constants; throws DimensionMismatch.
Vector bracket(const MetricLieAlgebra & M, const Vector & x, const Vector & y);

/// Orthogonal direct sum of two metric Lie algebras (brackets between the
/// factors vanish, the factors are orthogonal).
MetricLieAlgebra orthogonal_sum(const MetricLieAlgebra & A, const MetricLieAlgebra & B);

/// The same metric Lie algebra written in the basis f_a = sum_i change(i,a) e_i.
MetricLieAlgebra change_basis(const MetricLieAlgebra & M, const Matrix & change);

/// A linear subspace of the algebra, stored as columns in input coordinates.
class Subspace
{
public:
  Subspace() = default;

  /// Validates independence; if `orthonormal` is set also validates
  /// basis^T G basis = I.
  Subspace(const MetricLieAlgebra & M, Matrix basis, bool orthonormal, const Tolerances & tol = {});

  /// Metric Gram-Schmidt of the given columns.
  static Subspace orthonormalized(const MetricLieAlgebra & M, const Matrix & columns,
                                  const Tolerances & tol = {});

  /// Orthogonal complement, orthonormal.
  static Subspace complement(const MetricLieAlgebra & M, const Matrix & columns,
                             const Tolerances & tol = {});

  int ambient_dim() const { return static_cast<int>(m_basis.rows()); }
  int dim() const { return static_cast<int>(m_basis.cols()); }
  const Matrix & basis() const { return m_basis; }
  bool orthonormal() const { return m_orthonormal; }

private:
  Matrix m_basis;
  bool m_orthonormal = false;
};

} // namespace tgh
