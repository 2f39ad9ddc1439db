#include "tgh/curvature.hpp"

#include <cmath>

#include "tgh/errors.hpp"

namespace tgh {

ConnectionTable::ConnectionTable(std::vector<Matrix> operators) : m_ops(std::move(operators)) {}

Matrix ConnectionTable::covariant_operator(const Vector & x) const
{
  const int n = dim();
  Matrix out = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (x(i) != 0.0) out += x(i) * m_ops[i];
  }
  return out;
}

Vector ConnectionTable::covariant(const Vector & x, const Vector & y) const
{
  return covariant_operator(x) * y;
}

double ConnectionTable::metric_residual() const
{
  double worst = 0.0;
  for (const auto & op : m_ops) {
    worst = std::max(worst, (op + op.transpose()).cwiseAbs().maxCoeff());
  }
  return worst;
}

double ConnectionTable::torsion_residual(const StructureConstants & c) const
{
  const int n = dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        worst = std::max(worst, std::abs(gamma(i, j, k) - gamma(j, i, k) - c(i, j, k)));
      }
    }
  }
  return worst;
}

int pair_index(int n, int i, int j)
{
  // rows i = 0..i-1 contribute (n-1) + (n-2) + ... entries
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Vector wedge(const Vector & x, const Vector & y)
{
  const int n = static_cast<int>(x.size());
  Vector out(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out(pair_index(n, i, j)) = x(i) * y(j) - x(j) * y(i);
    }
  }
  return out;
}

CurvatureData::CurvatureData(int dim, std::vector<double> components)
: m_dim(dim), m_r(std::move(components))
{
  const int n = dim;
  const int N = n * (n - 1) / 2;
  m_operator = Matrix::Zero(N, N);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          m_operator(pair_index(n, i, j), pair_index(n, k, l)) = component(i, j, l, k);
        }
      }
    }
  }
  if (N > 0) {
    const Matrix sym = 0.5 * (m_operator + m_operator.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
    m_eigenvalues = eig.eigenvalues();
    m_eigenvectors = eig.eigenvectors();
  } else {
    m_eigenvalues = Vector(0);
    m_eigenvectors = Matrix(0, 0);
  }
}

Vector CurvatureData::apply(const Vector & x, const Vector & y, const Vector & z) const
{
  const int n = m_dim;
  Vector out = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (y(j) == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        const double w = x(i) * y(j) * z(k);
        if (w == 0.0) continue;
        for (int l = 0; l < n; ++l) {
          out(l) += w * component(i, j, k, l);
        }
      }
    }
  }
  return out;
}

double CurvatureData::symmetry_residual() const
{
  const int n = m_dim;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double r = component(i, j, k, l);
          worst = std::max(worst, std::abs(r + component(j, i, k, l)));
          worst = std::max(worst, std::abs(r + component(i, j, l, k)));
          worst = std::max(worst, std::abs(r - component(k, l, i, j)));
        }
  if (m_operator.size() > 0) {
    worst = std::max(worst, (m_operator - m_operator.transpose()).cwiseAbs().maxCoeff());
  }
  return worst;
}

double CurvatureData::bianchi_residual() const
{
  const int n = m_dim;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          worst = std::max(worst, std::abs(component(i, j, k, l) + component(i, k, l, j) + component(i, l, j, k)));
        }
  return worst;
}

double CurvatureData::reconstruction_residual() const
{
  if (m_operator.size() == 0) return 0.0;
  const Matrix rebuilt = m_eigenvectors * m_eigenvalues.asDiagonal() * m_eigenvectors.transpose();
  return (rebuilt - m_operator).cwiseAbs().maxCoeff();
}

ConnectionTable levi_civita(const MetricLieAlgebra & M)
{
  // Koszul for left-invariant fields in an orthonormal frame:
  // <nabla_{E_i} E_j, E_k> = 1/2 (c_ijk - c_jki + c_kij)
  const int n = M.dim();
  const StructureConstants & c = M.frame_constants();
  std::vector<Matrix> ops(n, Matrix::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        ops[i](k, j) = 0.5 * (c(i, j, k) - c(j, k, i) + c(k, i, j));
      }
    }
  }
  return ConnectionTable(std::move(ops));
}

CurvatureData curvature_tensor(const MetricLieAlgebra & M)
{
  const int n = M.dim();
  const ConnectionTable gamma = levi_civita(M);
  const StructureConstants & c = M.frame_constants();
  std::vector<double> r(static_cast<std::size_t>(n) * n * n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix op = gamma.covariant_operator(i) * gamma.covariant_operator(j)
                - gamma.covariant_operator(j) * gamma.covariant_operator(i);
      for (int m = 0; m < n; ++m) {
        if (c(i, j, m) != 0.0) op -= c(i, j, m) * gamma.covariant_operator(m);
      }
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          r[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l] = op(l, k);
        }
      }
    }
  }
  return CurvatureData(n, std::move(r));
}

CurvatureSpectrum curvature_operator_eigen(const MetricLieAlgebra & M)
{
  const CurvatureData R = curvature_tensor(M);
  return {R.eigenvalues(), R.eigenvectors()};
}

double sectional(const MetricLieAlgebra & M, const CurvatureData & R, const Vector & x,
                 const Vector & y, const Tolerances & tol)
{
  if (x.size() != M.dim() || y.size() != M.dim()) {
    throw DimensionMismatch("sectional curvature arguments must have length " + std::to_string(M.dim()));
  }
  const Vector fx = M.to_frame(x);
  const Vector fy = M.to_frame(y);
  const double xx = fx.squaredNorm();
  const double yy = fy.squaredNorm();
  const double xy = fx.dot(fy);
  const double area2 = xx * yy - xy * xy;
  if (!(xx > 0.0 && yy > 0.0) || !(area2 > tol.degenerate_plane * xx * yy)) {
    throw DegeneratePlane("sectional curvature requested for a degenerate plane");
  }
  return R.apply(fx, fy, fy).dot(fx) / area2;
}

double sectional(const MetricLieAlgebra & M, const Vector & x, const Vector & y, const Tolerances & tol)
{
  return sectional(M, curvature_tensor(M), x, y, tol);
}

} // namespace tgh
