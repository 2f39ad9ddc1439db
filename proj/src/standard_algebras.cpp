#include "tgh/standard_algebras.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tgh/errors.hpp"

namespace tgh {

namespace {

MetricLieAlgebra orthonormal(const StructureConstants & c, const Tolerances & tol)
{
  return MetricLieAlgebra(LieAlgebra(c, tol), Matrix::Identity(c.dim(), c.dim()), tol);
}

} // namespace

MetricLieAlgebra sl2_algebra(double a, double b, const Tolerances & tol)
{
  if (!(a * b != 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw BadParams("sl2 needs nonzero finite a and b");
  }
  Eigen::Matrix2d N, U, H;
  N << 0, 1, -1, 0;
  U << 0, 1, 0, 0;
  H << 1, 0, 0, -1;
  const std::array<Eigen::Matrix2d, 3> E = {a * N, 2.0 * b * U, b * H};

  // coordinates of a traceless matrix in the basis E
  Eigen::Matrix<double, 4, 3> flat;
  for (int k = 0; k < 3; ++k) flat.col(k) = Eigen::Map<const Eigen::Vector4d>(E[k].data());
  const auto solver = flat.colPivHouseholderQr();

  StructureConstants c(3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Eigen::Matrix2d comm = E[i] * E[j] - E[j] * E[i];
      const Eigen::Vector3d coeffs = solver.solve(Eigen::Map<const Eigen::Vector4d>(comm.data()));
      c.set_bracket(i, j, coeffs);
    }

  // closed form of the same table
  StructureConstants expected(3);
  expected.set_bracket(0, 1, Eigen::Vector3d(0, 0, 2 * a));
  expected.set_bracket(0, 2, Eigen::Vector3d(2 * b, -2 * a, 0));
  expected.set_bracket(1, 2, Eigen::Vector3d(0, -2 * b, 0));
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (std::abs(c(i, j, k) - expected(i, j, k)) > 1e-12 * scale) {
          throw Error("InternalError", "sl2 commutators disagree with the closed-form bracket table");
        }
  return orthonormal(c, tol);
}

MetricLieAlgebra nonhomo_algebra(const Tolerances & tol)
{
  StructureConstants c(4);
  c.set_bracket(0, 1, Eigen::Vector4d(0, 1, 1, 0));
  c.set_bracket(0, 2, Eigen::Vector4d(0, -1, 1, 0));
  c.set_bracket(0, 3, Eigen::Vector4d(0, 0, 0, 2));
  return orthonormal(c, tol);
}

MetricLieAlgebra heisenberg_algebra(const Tolerances & tol)
{
  StructureConstants c(3);
  c.set_bracket(0, 1, Eigen::Vector3d(0, 0, 1));
  return orthonormal(c, tol);
}

MetricLieAlgebra abelian_algebra(int n, const Tolerances & tol)
{
  if (n < 1) throw BadParams("abelian algebra needs n >= 1");
  return orthonormal(StructureConstants(n), tol);
}

MetricLieAlgebra hyperbolic_plane_algebra(double c, const Tolerances & tol)
{
  StructureConstants s(2);
  s.set_bracket(0, 1, Eigen::Vector2d(0, c));
  return orthonormal(s, tol);
}

} // namespace tgh
