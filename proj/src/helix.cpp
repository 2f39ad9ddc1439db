#include "tgh/helix.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "tgh/errors.hpp"
#include "tgh/search.hpp"
#include "frame_util.hpp"

namespace tgh {

namespace {

/// Coefficients of [L_a, L_b] along the orthonormal columns of L (frame coordinates).
StructureConstants projected_constants(const MetricLieAlgebra & M, const Matrix & L)
{
  const int m = static_cast<int>(L.cols());
  StructureConstants q(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Vector br = M.frame_bracket(L.col(a), L.col(b));
      for (int c = 0; c < m; ++c) q(a, b, c) = L.col(c).dot(br);
    }
  return q;
}

double table_residual(const StructureConstants & q, double k1, double k2)
{
  // [T,N1] = k2 N2 - k1 T, [T,N2] = -k2 N1, [N1,N2] = -k1 N2
  const double expected[3][3] = {{-k1, 0.0, k2}, {0.0, -k2, 0.0}, {0.0, 0.0, -k1}};
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  double worst = 0.0;
  for (int p = 0; p < 3; ++p)
    for (int c = 0; c < 3; ++c)
      worst = std::max(worst, std::abs(q(pairs[p][0], pairs[p][1], c) - expected[p][c]));
  return worst;
}

} // namespace

double bracket_table_residual(const MetricLieAlgebra & M, const Vector & T, const Vector & N1, const Vector & N2,
                              double k1, double k2)
{
  Matrix L(M.dim(), 3);
  L.col(0) = M.to_frame(T);
  L.col(1) = M.to_frame(N1);
  L.col(2) = M.to_frame(N2);
  return table_residual(projected_constants(M, L), k1, k2);
}

HelixWitness helix_witness(const MetricLieAlgebra & M, const Vector & T, const Tolerances & tol)
{
  const int n = M.dim();
  const FrenetData frenet = frenet_orbit(M, T, n - 1, tol);
  if (frenet.order != 2) {
    throw NotHelixOrderTwo("normal orbit has Frenet order " + std::to_string(frenet.order) + ", not 2");
  }
  const Matrix L = M.to_frame(frenet.frame);
  const Matrix complement = detail::complement_of(L);

  double ideal_residual = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int j = 0; j < complement.cols(); ++j) {
      const Vector br = M.frame_bracket(Vector::Unit(n, a), complement.col(j));
      ideal_residual = std::max(ideal_residual, (L.transpose() * br).norm());
    }
  }
  if (!(ideal_residual <= tol.ideal)) {
    std::ostringstream msg;
    msg << "Lambda^perp is not an ideal: residual " << ideal_residual;
    throw IdealResidualExceeded(msg.str(), ideal_residual);
  }

  HelixWitness w;
  w.T = frenet.frame.col(0);
  w.N1 = frenet.frame.col(1);
  w.N2 = frenet.frame.col(2);
  w.k1 = frenet.curvatures[0];
  w.k2 = frenet.curvatures[1];
  w.lambda = Subspace(M, frenet.frame, true, tol);
  w.s = Subspace(M, Matrix(frenet.frame.rightCols(2)), true, tol);
  w.ideal = Subspace(M, M.from_frame(complement), true, tol);
  w.quotient = projected_constants(M, L);
  w.recovered_a = w.k2 / 2.0;
  w.recovered_b = w.k1 / 2.0;
  w.residuals["ideal_residual"] = ideal_residual;
  w.residuals["bracket_table_residual"] = table_residual(w.quotient, w.k1, w.k2);

  double sl2 = std::numeric_limits<double>::infinity();
  try {
    const Sl2Recognition rec = sl2_recognize(w.quotient, Matrix::Identity(3, 3), tol);
    sl2 = std::max({rec.table_residual, std::abs(rec.a - w.recovered_a), std::abs(rec.b - w.recovered_b)});
  } catch (const NotRecognized &) {
  }
  w.residuals["sl2_residual"] = sl2;
  return w;
}

Sl2Recognition sl2_recognize(const StructureConstants & C, const Matrix & gram, const Tolerances & tol)
{
  if (C.dim() != 3 || gram.rows() != 3 || gram.cols() != 3) {
    throw NotRecognized("sl(2) recognition needs a 3-dimensional algebra");
  }
  const MetricLieAlgebra M(LieAlgebra(C, tol), gram, tol);

  // sl(2, R) is the only 3-dimensional real Lie algebra whose Killing form
  // is nondegenerate and indefinite.
  Matrix ad[3];
  for (int i = 0; i < 3; ++i) ad[i] = M.algebra().ad(Vector::Unit(3, i));
  Matrix killing(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) killing(i, j) = (ad[i] * ad[j]).trace();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(killing, Eigen::EigenvaluesOnly);
  const Vector & ev = eig.eigenvalues();
  const double scale = std::max(1e-300, ev.cwiseAbs().maxCoeff());
  const double floor = 1e-8 * scale;
  if (!(std::abs(ev(0)) > floor && std::abs(ev(1)) > floor && std::abs(ev(2)) > floor) || ev(0) > 0 || ev(1) < 0) {
    throw NotRecognized("Killing form is not of sl(2, R) type");
  }

  Tolerances search_tol = tol;
  search_tol.seeds = std::max(tol.seeds, 32);
  const SearchResult found = search_tg_hyperplanes(M, search_tol);
  for (const Vector & T : found.normals) {
    const FrenetData f = frenet_orbit(M, T, 2, tol);
    if (f.order != 2) continue;
    const double r = bracket_table_residual(M, f.frame.col(0), f.frame.col(1), f.frame.col(2), f.curvatures[0],
                                            f.curvatures[1]);
    if (r < tol.sl2_table) {
      return Sl2Recognition{f.curvatures[1] / 2.0, f.curvatures[0] / 2.0, f.frame.col(0), f.frame.col(1),
                            f.frame.col(2), r};
    }
  }
  throw NotRecognized("no orthonormal frame matches the sl(2) bracket table");
}

} // namespace tgh
