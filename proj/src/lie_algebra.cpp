#include "tgh/lie_algebra.hpp"

#include <cmath>
#include <sstream>

#include "tgh/errors.hpp"

namespace tgh {

StructureConstants::StructureConstants(int dim)
: m_dim(dim), m_data(static_cast<std::size_t>(dim) * dim * dim, 0.0)
{
  if (dim < 1) {
    throw InvalidArgument("structure constants need a positive dimension");
  }
}

void StructureConstants::set_bracket(int i, int j, const Vector & v)
{
  if (v.size() != m_dim) {
    throw DimensionMismatch("bracket coefficient vector has wrong length");
  }
  for (int k = 0; k < m_dim; ++k) {
    (*this)(i, j, k) = v(k);
    (*this)(j, i, k) = -v(k);
  }
}

Vector StructureConstants::bracket_of_basis(int i, int j) const
{
  Vector v(m_dim);
  for (int k = 0; k < m_dim; ++k) {
    v(k) = (*this)(i, j, k);
  }
  return v;
}

StructureConstants StructureConstants::transformed(const Matrix & change) const
{
  const int n = m_dim;
  const Matrix inverse = change.inverse();
  StructureConstants out(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Vector v = Vector::Zero(n);
      for (int i = 0; i < n; ++i) {
        if (change(i, a) == 0.0) continue;
        for (int j = 0; j < n; ++j) {
          const double w = change(i, a) * change(j, b);
          if (w == 0.0) continue;
          for (int k = 0; k < n; ++k) {
            v(k) += w * (*this)(i, j, k);
          }
        }
      }
      const Vector f = inverse * v;
      for (int c = 0; c < n; ++c) {
        out(a, b, c) = f(c);
      }
    }
  }
  return out;
}

double jacobi_residual(const StructureConstants & c)
{
  const int n = c.dim();
  // [[e_i,e_j],e_k] = sum_m c[i][j][m] c[m][k][.]
  auto nested = [&](int i, int j, int k, int l) {
    double s = 0.0;
    for (int m = 0; m < n; ++m) {
      s += c(i, j, m) * c(m, k, l);
    }
    return s;
  };
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const double cyc = nested(i, j, k, l) + nested(j, k, i, l) + nested(k, i, j, l);
          worst = std::max(worst, std::abs(cyc));
        }
      }
    }
  }
  return worst;
}

LieAlgebra::LieAlgebra(StructureConstants constants, const Tolerances & tol)
: m_constants(std::move(constants))
{
  const int n = m_constants.dim();
  if (n < 1) {
    throw InvalidArgument("Lie algebra must have positive dimension");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (std::abs(m_constants(i, j, k) + m_constants(j, i, k)) > tol.antisymmetry) {
          std::ostringstream msg;
          msg << "structure constants not antisymmetric at (" << i << "," << j << "," << k << ")";
          throw InvalidArgument(msg.str());
        }
      }
    }
  }
  const double residual = jacobi_residual(m_constants);
  if (!(residual <= tol.jacobi)) {
    std::ostringstream msg;
    msg << "Jacobi identity violated: residual " << residual;
    throw JacobiViolation(msg.str(), residual);
  }
}

Vector LieAlgebra::bracket(const Vector & x, const Vector & y) const
{
  const int n = dim();
  if (x.size() != n || y.size() != n) {
    throw DimensionMismatch("bracket arguments must have length " + std::to_string(n));
  }
  Vector out = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const double w = x(i) * y(j);
      if (w == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        out(k) += w * m_constants(i, j, k);
      }
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector & x) const
{
  const int n = dim();
  Matrix out(n, n);
  for (int j = 0; j < n; ++j) {
    out.col(j) = bracket(x, Vector::Unit(n, j));
  }
  return out;
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra, Matrix gram, const Tolerances & tol)
: m_algebra(std::move(algebra)), m_gram(std::move(gram))
{
  const int n = m_algebra.dim();
  if (m_gram.rows() != n || m_gram.cols() != n) {
    throw DimensionMismatch("Gram matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if ((m_gram - m_gram.transpose()).cwiseAbs().maxCoeff() > tol.symmetry * std::max(1.0, m_gram.cwiseAbs().maxCoeff())) {
    throw InvalidArgument("Gram matrix is not symmetric");
  }
  m_gram = 0.5 * (m_gram + m_gram.transpose());

  Eigen::SelfAdjointEigenSolver<Matrix> eig(m_gram, Eigen::EigenvaluesOnly);
  const double smallest = eig.eigenvalues()(0);
  if (!(smallest > 0.0)) {
    std::ostringstream msg;
    msg << "Gram matrix is not positive definite: smallest eigenvalue " << smallest;
    throw NotPositiveDefinite(msg.str(), smallest);
  }

  // Cholesky G = L L^T gives the frame P = L^{-T}; one metric Gram-Schmidt
  // pass removes the residual non-orthogonality of the triangular solve.
  Eigen::LLT<Matrix> llt(m_gram);
  Matrix L = llt.matrixL();
  m_change = L.transpose().triangularView<Eigen::Upper>().solve(Matrix::Identity(n, n));
  for (int a = 0; a < n; ++a) {
    Vector p = m_change.col(a);
    for (int b = 0; b < a; ++b) {
      const Vector q = m_change.col(b);
      p -= q.dot(m_gram * p) * q;
    }
    p /= std::sqrt(p.dot(m_gram * p));
    m_change.col(a) = p;
  }
  m_frame_residual = (m_change.transpose() * m_gram * m_change - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  m_change_lu.compute(m_change);
  m_frame_constants = m_algebra.constants().transformed(m_change);
}

Vector MetricLieAlgebra::to_frame(const Vector & x) const
{
  if (x.size() != dim()) throw DimensionMismatch("vector has wrong length");
  return m_change_lu.solve(x);
}

Vector MetricLieAlgebra::from_frame(const Vector & x) const
{
  if (x.size() != dim()) throw DimensionMismatch("vector has wrong length");
  return m_change * x;
}

Matrix MetricLieAlgebra::to_frame(const Matrix & columns) const
{
  if (columns.rows() != dim()) throw DimensionMismatch("matrix has wrong row count");
  if (columns.cols() == 0) return Matrix(dim(), 0);
  return m_change_lu.solve(columns);
}

Matrix MetricLieAlgebra::from_frame(const Matrix & columns) const
{
  if (columns.rows() != dim()) throw DimensionMismatch("matrix has wrong row count");
  return m_change * columns;
}

double MetricLieAlgebra::inner(const Vector & x, const Vector & y) const
{
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("vector has wrong length");
  return x.dot(m_gram * y);
}

double MetricLieAlgebra::norm(const Vector & x) const
{
  return std::sqrt(std::max(0.0, inner(x, x)));
}

Vector MetricLieAlgebra::frame_bracket(const Vector & x, const Vector & y) const
{
  const int n = dim();
  Vector out = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const double w = x(i) * y(j);
      if (w == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        out(k) += w * m_frame_constants(i, j, k);
      }
    }
  }
  return out;
}

Vector bracket(const MetricLieAlgebra & M, const Vector & x, const Vector & y)
{
  return M.bracket(x, y);
}

MetricLieAlgebra orthogonal_sum(const MetricLieAlgebra & A, const MetricLieAlgebra & B)
{
  const int na = A.dim();
  const int nb = B.dim();
  StructureConstants c(na + nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < na; ++k) c(i, j, k) = A.algebra().constants()(i, j, k);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nb; ++k) c(na + i, na + j, na + k) = B.algebra().constants()(i, j, k);
  Matrix g = Matrix::Zero(na + nb, na + nb);
  g.topLeftCorner(na, na) = A.gram();
  g.bottomRightCorner(nb, nb) = B.gram();
  return MetricLieAlgebra(LieAlgebra(std::move(c)), g);
}

MetricLieAlgebra change_basis(const MetricLieAlgebra & M, const Matrix & change)
{
  if (change.rows() != M.dim() || change.cols() != M.dim()) {
    throw DimensionMismatch("basis change must be square of the algebra dimension");
  }
  StructureConstants c = M.algebra().constants().transformed(change);
  // Round-off from the change can break exact antisymmetry; restore it.
  const int n = M.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double v = 0.5 * (c(i, j, k) - c(j, i, k));
        c(i, j, k) = v;
        c(j, i, k) = -v;
      }
    }
  }
  Matrix g = change.transpose() * M.gram() * change;
  return MetricLieAlgebra(LieAlgebra(std::move(c)), 0.5 * (g + g.transpose()));
}

Subspace::Subspace(const MetricLieAlgebra & M, Matrix basis, bool orthonormal, const Tolerances & tol)
: m_basis(std::move(basis)), m_orthonormal(orthonormal)
{
  if (m_basis.rows() != M.dim()) {
    throw DimensionMismatch("subspace basis vectors must have length " + std::to_string(M.dim()));
  }
  if (m_basis.cols() > M.dim()) {
    throw InvalidArgument("subspace has more generators than the ambient dimension");
  }
  if (m_basis.cols() > 0) {
    Eigen::JacobiSVD<Matrix> svd(m_basis);
    const double smallest = svd.singularValues()(svd.singularValues().size() - 1);
    if (!(smallest > tol.independence)) {
      throw InvalidArgument("subspace generators are linearly dependent");
    }
  }
  if (m_orthonormal && m_basis.cols() > 0) {
    const Matrix gram = m_basis.transpose() * M.gram() * m_basis;
    const double r = (gram - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
    if (r > tol.orthonormal * 1e3) {
      throw InvalidArgument("subspace basis flagged orthonormal but is not");
    }
  }
}

Subspace Subspace::orthonormalized(const MetricLieAlgebra & M, const Matrix & columns, const Tolerances & tol)
{
  if (columns.rows() != M.dim()) {
    throw DimensionMismatch("subspace basis vectors must have length " + std::to_string(M.dim()));
  }
  // Validate independence on the raw generators first.
  Subspace raw(M, columns, false, tol);
  Matrix q = M.to_frame(columns);
  for (int a = 0; a < q.cols(); ++a) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int b = 0; b < a; ++b) {
        q.col(a) -= q.col(b).dot(q.col(a)) * q.col(b);
      }
    }
    q.col(a).normalize();
  }
  Subspace out;
  out.m_basis = M.from_frame(q);
  out.m_orthonormal = true;
  return out;
}

Subspace Subspace::complement(const MetricLieAlgebra & M, const Matrix & columns, const Tolerances & tol)
{
  const int n = M.dim();
  const int m = static_cast<int>(columns.cols());
  Subspace raw(M, columns, false, tol);
  Subspace out;
  if (m == n) {
    out.m_basis = Matrix(n, 0);
    out.m_orthonormal = true;
    return out;
  }
  Matrix q = M.to_frame(columns);
  Eigen::HouseholderQR<Matrix> qr(q);
  const Matrix full = qr.householderQ() * Matrix::Identity(n, n);
  out.m_basis = M.from_frame(Matrix(full.rightCols(n - m)));
  out.m_orthonormal = true;
  return out;
}

} // namespace tgh
