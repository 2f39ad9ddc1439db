#pragma once

#include <cmath>
#include <sstream>

#include "tgh/curvature.hpp"
#include "tgh/errors.hpp"

namespace tgh::detail {

/// Frame coordinates of a metric-unit vector; throws NonUnitVector.
inline Vector unit_frame_vector(const MetricLieAlgebra & M, const Vector & T, const Tolerances & tol)
{
  if (T.size() != M.dim()) {
    throw DimensionMismatch("normal vector must have length " + std::to_string(M.dim()));
  }
  const double norm = M.norm(T);
  if (!(std::abs(norm - 1.0) <= tol.unit)) {
    std::ostringstream msg;
    msg << "normal vector is not unit: |T| = " << norm;
    throw NonUnitVector(msg.str(), norm);
  }
  return M.to_frame(T);
}

/// form(i, j) = <nabla_{E_i} E_j, t>.
inline Matrix normal_form(const ConnectionTable & gamma, const Vector & t)
{
  const int n = gamma.dim();
  Matrix form(n, n);
  for (int i = 0; i < n; ++i) {
    form.row(i) = (gamma.covariant_operator(i).transpose() * t).transpose();
  }
  return form;
}

/// Orthonormal basis (columns) of the Euclidean complement of span(columns).
inline Matrix complement_of(const Matrix & columns)
{
  const int n = static_cast<int>(columns.rows());
  const int m = static_cast<int>(columns.cols());
  if (m == 0) return Matrix::Identity(n, n);
  Eigen::HouseholderQR<Matrix> qr(columns);
  const Matrix full = qr.householderQ() * Matrix::Identity(n, n);
  return full.rightCols(n - m);
}

/// Flips the sign so that the first entry with |x_i| > eps is positive.
inline Vector sign_normalized(Vector v, double eps = 1e-8)
{
  const double scale = std::max(1e-300, v.cwiseAbs().maxCoeff());
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > eps * scale) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  return v;
}

} // namespace tgh::detail
