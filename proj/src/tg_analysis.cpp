#include "tgh/tg_analysis.hpp"

#include <cmath>
#include <sstream>

#include "tgh/errors.hpp"
#include "frame_util.hpp"

namespace tgh {

SubspaceCheck tg_subspace_check(const MetricLieAlgebra & M, const Subspace & S, const Tolerances & tol)
{
  if (S.ambient_dim() != M.dim()) {
    throw DimensionMismatch("subspace lives in dimension " + std::to_string(S.ambient_dim()) +
                            ", algebra has dimension " + std::to_string(M.dim()));
  }
  const int n = M.dim();
  const Matrix q = M.to_frame(Subspace::orthonormalized(M, S.basis(), tol).basis());
  const Matrix normal = Matrix::Identity(n, n) - q * q.transpose();
  const ConnectionTable gamma = levi_civita(M);

  SubspaceCheck out;
  for (int a = 0; a < q.cols(); ++a) {
    for (int b = 0; b < q.cols(); ++b) {
      const Vector leak = normal * M.frame_bracket(q.col(a), q.col(b));
      const double bracket_leak = leak.norm();
      if (bracket_leak > out.bracket_residual) {
        out.bracket_residual = bracket_leak;
        out.witness = SubspaceCheck::Witness{a, b, M.from_frame(leak)};
      }
      const double conn_leak = (normal * gamma.covariant(q.col(a), q.col(b))).norm();
      out.connection_residual = std::max(out.connection_residual, conn_leak);
    }
  }
  out.residual = std::max(out.bracket_residual, out.connection_residual);
  out.totally_geodesic = out.residual < tol.totally_geodesic;
  return out;
}

double hyperplane_tg_residual(const MetricLieAlgebra & M, const Vector & T, const Tolerances & tol)
{
  const Vector t = detail::unit_frame_vector(M, T, tol);
  const ConnectionTable gamma = levi_civita(M);
  const Matrix form = detail::normal_form(gamma, t);
  const Matrix q = detail::complement_of(t);
  const Matrix restricted = q.transpose() * form * q;
  if (restricted.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(restricted);
  return svd.singularValues()(0);
}

double codazzi_residual(const MetricLieAlgebra & M, const Vector & T, const Tolerances & tol)
{
  const Vector t = detail::unit_frame_vector(M, T, tol);
  const CurvatureData R = curvature_tensor(M);
  const Matrix q = detail::complement_of(t);
  const int n = M.dim();
  const int m = static_cast<int>(q.cols());

  // S(i,j,k) = <R(E_i,E_j)E_k, t>, then restrict every slot to T^perp.
  std::vector<double> s(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = 0.0;
        for (int l = 0; l < n; ++l) v += R.component(i, j, k, l) * t(l);
        s[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
      }
  double sum = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        double v = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
              v += q(i, a) * q(j, b) * q(k, c) * s[(static_cast<std::size_t>(i) * n + j) * n + k];
        sum += v * v;
      }
  return std::sqrt(sum);
}

CharacterSpace character_space(const LieAlgebra & L, const Tolerances & tol)
{
  const int n = L.dim();
  const int pairs = n * (n - 1) / 2;
  CharacterSpace out;
  if (pairs == 0) {
    out.basis = Matrix::Identity(n, n);
    return out;
  }
  Matrix brackets(pairs, n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) brackets.row(row++) = L.constants().bracket_of_basis(i, j).transpose();

  Eigen::JacobiSVD<Matrix> svd(brackets, Eigen::ComputeFullV);
  const Vector & sigma = svd.singularValues();
  const double scale = std::max(1.0, sigma.size() > 0 ? sigma(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) > tol.character * scale) ++rank;
  out.derived_dim = rank;
  const Matrix kernel = svd.matrixV().rightCols(n - rank);
  out.basis = kernel.transpose();
  for (int r = 0; r < out.basis.rows(); ++r) {
    Eigen::RowVectorXd f = out.basis.row(r);
    for (int i = 0; i < n; ++i) f(i) = std::abs(f(i)) < 1e-15 ? 0.0 : f(i);
    out.basis.row(r) = detail::sign_normalized(Vector(f.transpose())).transpose();
  }
  return out;
}

FrenetData frenet_orbit(const MetricLieAlgebra & M, const Vector & T, int p_max, const Tolerances & tol)
{
  const int n = M.dim();
  if (p_max < 0 || p_max > n - 1) {
    throw InvalidArgument("frenet order bound must lie in [0, n-1]");
  }
  const Vector t = detail::unit_frame_vector(M, T, tol);
  const ConnectionTable gamma = levi_civita(M);
  const Matrix nabla_t = gamma.covariant_operator(t);

  FrenetData out;
  std::vector<Vector> frame{t};
  std::vector<double> k;
  auto next = [&](int s) {
    // w_s = nabla_T eps_s + k_{s-1} eps_{s-1}
    Vector w = nabla_t * frame[s - 1];
    if (s >= 2) w += k[s - 2] * frame[s - 2];
    return w;
  };
  for (int s = 1;; ++s) {
    const Vector w = next(s);
    const double ks = w.norm();
    if (ks >= tol.frenet_warn && ks < tol.frenet_zero) out.near_zero_warning = true;
    if (s > p_max || ks < tol.frenet_zero) {
      out.truncation_residual = ks;
      break;
    }
    k.push_back(ks);
    frame.push_back(w / ks);
  }

  out.order = static_cast<int>(k.size());
  out.curvatures = k;
  Matrix f(n, frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) f.col(i) = frame[i];
  out.orthonormality_residual = (f.transpose() * f - Matrix::Identity(f.cols(), f.cols())).cwiseAbs().maxCoeff();
  for (int s = 1; s <= out.order; ++s) {
    // nabla_T eps_s + k_{s-1} eps_{s-1} - k_s eps_{s+1}
    Vector r = nabla_t * frame[s - 1] - k[s - 1] * frame[s];
    if (s >= 2) r += k[s - 2] * frame[s - 2];
    out.recursion_residual = std::max(out.recursion_residual, r.norm());
  }
  out.frame = M.from_frame(f);
  return out;
}

EigenBlockCheck eigen_block_check(const MetricLieAlgebra & M, const Vector & T, const Tolerances & tol)
{
  const Vector t = detail::unit_frame_vector(M, T, tol);
  const CurvatureData R = curvature_tensor(M);
  const Matrix q = detail::complement_of(t);
  const int m = static_cast<int>(q.cols());

  // Jacobi operator X -> R(T,X)T restricted to T^perp.
  Matrix jacobi(m, m);
  for (int a = 0; a < m; ++a) {
    const Vector image = R.apply(t, q.col(a), t);
    for (int b = 0; b < m; ++b) jacobi(b, a) = q.col(b).dot(image);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (jacobi + jacobi.transpose()));

  EigenBlockCheck out;
  const Matrix & op = R.operator_matrix();
  const Vector & spectrum = R.eigenvalues();
  for (int a = 0; a < m; ++a) {
    const Vector e = q * eig.eigenvectors().col(a);
    const Vector form = wedge(t, e);
    const Vector image = op * form;
    const double lambda = form.dot(image) / form.squaredNorm();
    out.eigenvalues.push_back(lambda);
    out.eigenvector_residual = std::max(out.eigenvector_residual, (image - lambda * form).norm());
    double nearest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < spectrum.size(); ++i) nearest = std::min(nearest, std::abs(spectrum(i) - lambda));
    out.spectrum_residual = std::max(out.spectrum_residual, nearest);
  }
  if (!out.eigenvalues.empty()) {
    const auto [lo, hi] = std::minmax_element(out.eigenvalues.begin(), out.eigenvalues.end());
    if (*hi - *lo < tol.eigen_block) out.common_eigenvalue = 0.5 * (*hi + *lo);
  }
  return out;
}

} // namespace tgh

namespace tgh {

double first_normal_residual(const MetricLieAlgebra & M, const FrenetData & F)
{
  const int n = M.dim();
  const Vector T = F.frame.col(0);
  const double k1 = F.order >= 1 ? F.curvatures[0] : 0.0;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vector X = Vector::Unit(n, i);
    double r = M.inner(T, M.bracket(X, T));
    if (F.order >= 1) r -= k1 * M.inner(F.frame.col(1), X);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double second_normal_residual(const MetricLieAlgebra & M, const FrenetData & F)
{
  if (F.order < 2) throw InvalidArgument("second normal needs Frenet order >= 2");
  const Vector T = F.frame.col(0), N1 = F.frame.col(1), N2 = F.frame.col(2);
  const double k1 = F.curvatures[0], k2 = F.curvatures[1];
  return M.norm(N2 - (M.bracket(T, N1) + k1 * T) / k2);
}

} // namespace tgh
