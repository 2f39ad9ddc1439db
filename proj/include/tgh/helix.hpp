#pragma once

#include <map>
#include <optional>
#include <string>

#include "tgh/tg_analysis.hpp"

namespace tgh {

/// Certificate that the normal orbit of T is a helix of order two whose
/// osculating space Lambda = span(T, N1, N2) is an sl(2) quotient of g.
struct HelixWitness
{
  Vector T, N1, N2;     ///< input coordinates
  double k1 = 0.0, k2 = 0.0;
  Subspace lambda;      ///< span(T, N1, N2), orthonormal
  Subspace s;           ///< span(N1, N2)
  Subspace ideal;       ///< Lambda^perp
  StructureConstants quotient; ///< brackets of g/I in the ordered basis (T, N1, N2)
  double recovered_a = 0.0;
  double recovered_b = 0.0;
  std::map<std::string, double> residuals; ///< ideal_residual, bracket_table_residual, sl2_residual
};

/// Builds the witness for a TG normal with an order-two orbit.
/// Throws NotHelixOrderTwo or IdealResidualExceeded (carrying the residual).
HelixWitness helix_witness(const MetricLieAlgebra & M, const Vector & T, const Tolerances & tol = {});

struct Sl2Recognition
{
  double a = 0.0;
  double b = 0.0;
  Vector T, N1, N2;       ///< the matching orthonormal frame (input coordinates)
  double table_residual = 0.0;
};

/// Recognizes a 3-dimensional metric Lie algebra as sl(2) with the
/// standard sl(2)(a, b) inner product: finds an orthonormal (T, N1, N2) with
/// [T,N1] = k2 N2 - k1 T, [T,N2] = -k2 N1, [N1,N2] = -k1 N2, and returns
/// (a, b) = (k2/2, k1/2). Throws NotRecognized.
Sl2Recognition sl2_recognize(const StructureConstants & C, const Matrix & gram, const Tolerances & tol = {});

/// Residual of the bracket table for an ordered orthonormal triple.
double bracket_table_residual(const MetricLieAlgebra & M, const Vector & T, const Vector & N1,
                              const Vector & N2, double k1, double k2);

} // namespace tgh
