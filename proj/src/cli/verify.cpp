#include "tgh/cli/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "tgh/classify.hpp"
#include "tgh/curvature.hpp"
#include "tgh/errors.hpp"
#include "tgh/frenet_numeric.hpp"
#include "tgh/helix.hpp"
#include "tgh/search.hpp"
#include "tgh/tg_analysis.hpp"

namespace tgh::cli {

namespace {

class Ledger
{
public:
  void below(const std::string & check, double value, double bound, const std::string & note = "")
  {
    lines.push_back({check, value, bound, true, value < bound, note});
  }
  void above(const std::string & check, double value, double bound, const std::string & note = "")
  {
    lines.push_back({check, value, bound, false, value > bound, note});
  }
  void failed(const std::string & check, const std::string & note)
  {
    lines.push_back({check, std::numeric_limits<double>::quiet_NaN(), 0.0, true, false, note});
  }

  std::vector<LedgerLine> lines;
};

Vector unit(int n, int i)
{
  return Vector::Unit(n, i);
}

Vector uniform_point(std::mt19937_64 & rng, const Vector & lo, const Vector & hi)
{
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vector p(lo.size());
  for (int i = 0; i < lo.size(); ++i) p(i) = lo(i) + (hi(i) - lo(i)) * u(rng);
  return p;
}

double christoffel_gap(const CoordinateMetric & CM, const Vector & x)
{
  const ChristoffelSymbols exact = christoffel(CM, x, Derivatives::Auto);
  const ChristoffelSymbols fd = christoffel(CM, x, Derivatives::FiniteDifference);
  double worst = 0.0;
  for (int k = 0; k < CM.dim; ++k) worst = std::max(worst, (exact.upper[k] - fd.upper[k]).cwiseAbs().maxCoeff());
  return worst;
}

void algebra_checks(Ledger & L, const MetricLieAlgebra & M, const Tolerances & tol)
{
  L.below("jacobi_residual", jacobi_residual(M.algebra()), tol.jacobi);
  L.below("frame_residual", M.frame_residual(), tol.orthonormal);
  const ConnectionTable gamma = levi_civita(M);
  L.below("torsion_residual", gamma.torsion_residual(M.frame_constants()), 1e-12);
  L.below("metric_compatibility_residual", gamma.metric_residual(), 1e-13);
  const CurvatureData R = curvature_tensor(M);
  L.below("curvature_symmetry_residual", R.symmetry_residual(), 1e-10);
  L.below("bianchi_residual", R.bianchi_residual(), 1e-10);
  L.below("operator_reconstruction_residual", R.reconstruction_residual(), 1e-10);

  const SearchResult S = search_tg_hyperplanes(M, tol);
  double search = 0.0, codazzi = 0.0, first = 0.0, second = 0.0, higher = 0.0;
  for (const Vector & T : S.normals) {
    search = std::max(search, hyperplane_tg_residual(M, T, tol));
    codazzi = std::max(codazzi, codazzi_residual(M, T, tol));
    const FrenetData F = frenet_orbit(M, T, M.dim() - 1, tol);
    first = std::max(first, first_normal_residual(M, F));
    if (F.order >= 2) second = std::max(second, second_normal_residual(M, F));
    if (classify_case(M, T, tol).case_tag == CaseTag::HigherOrder) higher += 1.0;
  }
  const std::string found = std::to_string(S.normals.size()) + " normals found";
  L.below("search_max_residual", search, tol.search_threshold, found);
  L.below("codazzi_max_residual", codazzi, 1e-9, found);
  L.below("first_normal_identity_residual", first, 1e-9, found);
  L.below("second_normal_identity_residual", second, 1e-9, found);
  L.below("higher_order_normals", higher, 0.5, found);
}

void sl2_checks(Ledger & L, const MetricLieAlgebra & M, double a, double b, const Tolerances & tol)
{
  const int n = M.dim();
  Matrix f(n, 2);
  f << unit(n, 1), unit(n, 2);
  L.below("subalgebra_E2_E3_tg_residual", tg_subspace_check(M, Subspace(M, f, true, tol), tol).residual,
          tol.totally_geodesic);
  const FrenetData F = frenet_orbit(M, unit(n, 0), n - 1, tol);
  L.below("frenet_order_gap", std::abs(F.order - 2), 0.5);
  if (F.order >= 2) {
    L.below("frenet_k1_error", std::abs(F.curvatures[0] - 2 * std::abs(b)), 1e-10);
    L.below("frenet_k2_error", std::abs(F.curvatures[1] - 2 * std::abs(a)), 1e-10);
  }
  try {
    const HelixWitness W = helix_witness(M, unit(n, 0), tol);
    for (const auto & [name, value] : W.residuals) L.below("helix_" + name, value, name == "sl2_residual" ? 1e-8 : 1e-9);
    L.below("recovered_a_error", std::abs(W.recovered_a - std::abs(a)), 1e-8);
    L.below("recovered_b_error", std::abs(W.recovered_b - std::abs(b)), 1e-8);
  } catch (const Error & e) {
    L.failed("helix_witness", e.kind() + ": " + e.what());
  }
}

void metric_energy_check(Ledger & L, const CoordinateMetric & CM, const Vector & x0, const Vector & v0,
                         const Tolerances & tol)
{
  try {
    const GeodesicTrajectory g = geodesic_integrate(CM, x0, v0, 1.0, tol.rk4_step, tol.speed_drift);
    L.below("speed_drift_per_unit_time", g.max_speed_drift, 1e-6);
  } catch (const Error & e) {
    L.failed("speed_drift_per_unit_time", e.kind() + ": " + e.what());
  }
}

void christoffel_check(Ledger & L, const CoordinateMetric & CM, const Vector & lo, const Vector & hi,
                       const Tolerances & tol)
{
  std::mt19937_64 rng(tol.seed);
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) worst = std::max(worst, christoffel_gap(CM, uniform_point(rng, lo, hi)));
  L.below("christoffel_exact_vs_fd", worst, 1e-6);
}

void nonhomo_checks(Ledger & L, const CatalogEntry & e, const Tolerances & tol)
{
  const MetricLieAlgebra & M = *e.algebra;
  const Vector Z = unit(4, 0), X1 = unit(4, 1), X2 = unit(4, 2), Y = unit(4, 3);
  Matrix span(4, 3);
  span << Z, Y, X2;
  const SubspaceCheck check = tg_subspace_check(M, Subspace(M, span, true, tol), tol);
  L.above("span_Z_Y_X2_bracket_residual", check.bracket_residual, tol.totally_geodesic, "not a subalgebra");
  L.below("bracket_Z_X2_component_X1_error", std::abs(M.inner(M.bracket(Z, X2), X1) + 1.0), 1e-12);
  L.below("hyperplane_X1_residual_error", std::abs(hyperplane_tg_residual(M, X1, tol) - 1.0), 1e-12);
  const ClassificationReport C = classify_case(M, Y, tol);
  L.below("classify_Y_circle_normal", C.case_tag == CaseTag::CircleNormal ? 0.0 : 1.0, 0.5, to_string(C.case_tag));
  L.below("classify_Y_k1_error", C.frenet.order >= 1 ? std::abs(C.frenet.curvatures[0] - 2.0) : 2.0, 1e-10);
  L.below("character_space_dim_error", std::abs(character_space(M.algebra(), tol).basis.rows() - 1), 0.5);

  const CoordinateMetric & CM = *e.metric;
  LevelSetHypersurface F{[](const Vector & x) { return x(1); }, [](const Vector &) { return Vector(unit(4, 1)); },
                         [](const Vector &) { return Matrix(Matrix::Zero(4, 4)); }};
  std::mt19937_64 rng(tol.seed);
  double sff = 0.0;
  for (int s = 0; s < 20; ++s) {
    Vector x = uniform_point(rng, Vector::Zero(4), Vector::Ones(4));
    x(1) = 0.0;
    sff = std::max(sff, second_fundamental_form(CM, F, x, tol.surface, tol.gradient_floor).max_norm);
  }
  L.below("leaf_x1_zero_sff_max_norm", sff, 1e-8);

  try {
    const GeodesicTrajectory g = geodesic_integrate(CM, Vector::Zero(4), unit(4, 0), 2.0, tol.rk4_step, tol.speed_drift);
    double off = 0.0;
    for (std::size_t s = 0; s < g.times.size(); ++s) {
      Vector d = g.points[s];
      d(0) -= g.times[s];
      off = std::max(off, d.cwiseAbs().maxCoeff());
    }
    L.below("geodesic_z_axis_deviation", off, 1e-8);
  } catch (const Error & err) {
    L.failed("geodesic_z_axis_deviation", err.kind() + ": " + err.what());
  }

  // at the origin Z = -d_z, X1 = d_x1, X2 = d_x2, Y = d_y
  const CurvatureData R = curvature_tensor(M);
  const CoordinateCurvature Rc = coordinate_curvature(CM, Vector::Zero(4), tol.curvature_fd_step);
  double gap = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double lie = sectional(M, R, unit(4, i), unit(4, j), tol);
      gap = std::max(gap, std::abs(lie - Rc(i, j, j, i)));
    }
  L.below("cross_engine_sectional_gap", gap, 1e-6);
  christoffel_check(L, CM, -Vector::Ones(4), Vector::Ones(4), tol);
  metric_energy_check(L, CM, Vector::Zero(4), Vector::Ones(4).normalized(), tol);
}

void hyperbolic2_checks(Ledger & L, const CatalogEntry & e, const Tolerances & tol)
{
  const MetricLieAlgebra & M = *e.algebra;
  L.below("lie_sectional_error", std::abs(sectional(M, unit(2, 0), unit(2, 1), tol) + 1.0), 1e-12);
  const CoordinateMetric & CM = *e.metric;
  L.below("coordinate_sectional_error",
          std::abs(coordinate_sectional(CM, Eigen::Vector2d(1.0, 0.3), unit(2, 0), unit(2, 1), tol.curvature_fd_step) + 1.0),
          1e-6);
  christoffel_check(L, CM, Eigen::Vector2d(0.1, 0.0), Eigen::Vector2d(1.1, 1.0), tol);
  metric_energy_check(L, CM, Eigen::Vector2d(1.0, 0.0), Eigen::Vector2d(0.6, 0.8), tol);

  const GeodesicTrajectory radial =
    geodesic_integrate(CM, Eigen::Vector2d(1.0, 0.5), Eigen::Vector2d(1.0, 0.0), 1.0, tol.rk4_step, tol.speed_drift);
  double drift = 0.0;
  for (const Vector & p : radial.points) drift = std::max(drift, std::abs(p(1) - 0.5));
  L.below("radial_geodesic_angle_drift", drift, 1e-10);

  // step halving: errors of h and h/2 against h/4
  const Vector x0 = Eigen::Vector2d(1.0, 0.0), v0 = Eigen::Vector2d(0.3, 0.5);
  std::vector<Vector> ends;
  for (double h : {0.1, 0.05, 0.025}) ends.push_back(geodesic_integrate(CM, x0, v0, 2.0, h, 1.0).points.back());
  const double ratio = (ends[0] - ends[1]).norm() / (ends[1] - ends[2]).norm();
  L.above("rk4_halving_ratio_lower", ratio, 8.0);
  L.below("rk4_halving_ratio_upper", ratio, 32.0);
}

void twisted_checks(Ledger & L, const CatalogEntry & e, const Tolerances & tol)
{
  const TwistedProductSpec & spec = *e.twisted;
  const CoordinateMetric & CM = *e.metric;
  const double kappa = spec.kappa;
  const int grid = std::max(2, tol.grid);

  std::vector<double> ts;
  for (int i = 0; i < grid; ++i) ts.push_back(2.0 * std::numbers::pi / std::abs(kappa) * i / (grid - 1));
  std::vector<Vector> us;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int j = 0; j < grid; ++j) {
    const double r = tol.polar_exclusion + (1.5 - tol.polar_exclusion) * j / (grid - 1);
    us.push_back(spec.anchor + r * Eigen::Vector2d(std::cos(golden * j), std::sin(golden * j)));
  }
  L.below("twisting_ode_residual", twisting_ode_residual(spec, ts, us), 1e-10);
  const EikonalResiduals eik = eikonal_residuals(spec, us);
  L.below("eikonal_alpha_residual", eik.alpha_residual, 1e-12);
  if (eik.beta_residual) {
    L.below("eikonal_beta_residual", *eik.beta_residual, 1e-12);
  } else {
    L.failed("eikonal_beta_residual", "no grid point with alpha > 0");
  }

  auto leaf_curve = [&](double t) {
    Vector p(3);
    p << t, spec.anchor;
    return p;
  };
  try {
    const NumericFrenet nf = frenet_numeric(CM, sample_curve(leaf_curve, -0.5, 0.01, 101), false, 3,
                                            tol.frenet_numeric_zero);
    auto estimate = [&](std::size_t i) { return i < nf.estimates.size() ? nf.estimates[i] : 0.0; };
    L.below("leaf_helix_k1_error", std::abs(estimate(0) - spec.k), 1e-3);
    L.below("leaf_helix_k2_error", std::abs(estimate(1) - std::abs(kappa)), 1e-3);
    L.below("leaf_helix_k3", estimate(2), 1e-4);
  } catch (const Error & err) {
    L.failed("leaf_helix", err.kind() + ": " + err.what());
  }

  LevelSetHypersurface leaf{[](const Vector & x) { return x(0); }, [](const Vector &) { return Vector(unit(3, 0)); },
                            [](const Vector &) { return Matrix(Matrix::Zero(3, 3)); }};
  double sff = 0.0, gauss = 0.0;
  for (int j = 0; j < 20; ++j) {
    Vector x(3);
    x << 0.0, us[j * (grid - 1) / 19];
    sff = std::max(sff, second_fundamental_form(CM, leaf, x, tol.surface, tol.gradient_floor).max_norm);
    const double ambient = coordinate_sectional(CM, x, unit(3, 1), unit(3, 2), tol.curvature_fd_step);
    const double intrinsic = coordinate_sectional(spec.base, x.tail(2), unit(2, 0), unit(2, 1), tol.curvature_fd_step);
    gauss = std::max(gauss, std::abs(ambient - intrinsic));
  }
  L.below("leaf_t_zero_sff_max_norm", sff, 1e-7);
  L.below("leaf_gauss_equation_gap", gauss, 1e-5);

  // Frenet frame at the anchor: (d_t, d_x, -d_y) <-> (E1, -E3, E2)
  const MetricLieAlgebra & M = *e.algebra;
  Vector anchor(3);
  anchor << 0.0, spec.anchor;
  const CoordinateCurvature Rc = coordinate_curvature(CM, anchor, tol.curvature_fd_step);
  const double gap = std::max({std::abs(Rc(0, 1, 1, 0) - sectional(M, unit(3, 0), unit(3, 2), tol)),
                               std::abs(Rc(0, 2, 2, 0) - sectional(M, unit(3, 0), unit(3, 1), tol)),
                               std::abs(Rc(1, 2, 2, 1) - sectional(M, unit(3, 1), unit(3, 2), tol))});
  L.below("cross_engine_sectional_gap", gap, 1e-6);
  christoffel_check(L, CM, Eigen::Vector3d(0.0, -0.5, -0.5), Eigen::Vector3d(1.0, 0.5, 0.5), tol);
  metric_energy_check(L, CM, Eigen::Vector3d(0.0, 0.2, 0.1), Eigen::Vector3d(0.5, 0.5, -0.5), tol);
}

void euclidean_checks(Ledger & L, const CatalogEntry & e, const Tolerances & tol)
{
  const CoordinateMetric & CM = *e.metric;
  const int n = CM.dim;
  std::mt19937_64 rng(tol.seed);
  double worst = 0.0;
  for (int s = 0; s < 20; ++s) {
    const ChristoffelSymbols c = christoffel(CM, uniform_point(rng, -Vector::Ones(n), Vector::Ones(n)));
    for (const Matrix & m : c.upper) worst = std::max(worst, m.cwiseAbs().maxCoeff());
  }
  L.below("christoffel_max", worst, 1e-14);
  const Vector x0 = Vector::LinSpaced(n, 0.1, 0.5), v0 = Vector::LinSpaced(n, 1.0, -1.0);
  const GeodesicTrajectory g = geodesic_integrate(CM, x0, v0, 1.0, tol.rk4_step, tol.speed_drift);
  double line = 0.0;
  for (std::size_t s = 0; s < g.times.size(); ++s)
    line = std::max(line, (g.points[s] - x0 - g.times[s] * v0).cwiseAbs().maxCoeff());
  L.below("straight_line_error", line, 1e-12);
  christoffel_check(L, CM, -Vector::Ones(n), Vector::Ones(n), tol);
}

} // namespace

std::vector<LedgerLine> verify_entry(const CatalogEntry & e, const Tolerances & tol)
{
  Ledger L;
  if (e.algebra) algebra_checks(L, *e.algebra, tol);
  if (e.name == "sl2") {
    sl2_checks(L, *e.algebra, e.params.at("a"), e.params.at("b"), tol);
  } else if (e.name == "twisted-h2") {
    sl2_checks(L, *e.algebra, e.params.at("kappa") / 2.0, 0.5, tol);
    twisted_checks(L, e, tol);
  } else if (e.name == "nonhomo") {
    nonhomo_checks(L, e, tol);
  } else if (e.name == "heisenberg") {
    const MetricLieAlgebra & M = *e.algebra;
    bool rejected = false;
    try {
      sl2_recognize(M.algebra().constants(), M.gram(), tol);
    } catch (const NotRecognized &) {
      rejected = true;
    }
    L.below("sl2_recognition_rejected", rejected ? 0.0 : 1.0, 0.5, "nilpotent algebra must not be recognized");
    L.below("character_space_dim_error", std::abs(character_space(M.algebra(), tol).basis.rows() - 2), 0.5);
  } else if (e.name == "abelian") {
    const MetricLieAlgebra & M = *e.algebra;
    const CurvatureSpectrum spec = curvature_operator_eigen(M);
    L.below("curvature_operator_max", spec.eigenvalues.size() ? spec.eigenvalues.cwiseAbs().maxCoeff() : 0.0, 1e-14);
    if (M.dim() >= 2) {
      L.below("continuum_flag", search_tg_hyperplanes(M, tol).continuum_detected ? 0.0 : 1.0, 0.5,
              "every hyperplane is totally geodesic");
    }
  } else if (e.name == "hyperbolic2") {
    hyperbolic2_checks(L, e, tol);
  } else if (e.name == "euclidean") {
    euclidean_checks(L, e, tol);
  }
  return L.lines;
}

nlohmann::json ledger_to_json(const std::vector<LedgerLine> & ledger)
{
  nlohmann::json out = nlohmann::json::array();
  for (const LedgerLine & l : ledger) {
    nlohmann::json line{{"check", l.check}, {"bound", l.bound}, {"relation", l.below ? "<" : ">"}, {"pass", l.pass}};
    line["value"] = std::isfinite(l.value) ? nlohmann::json(l.value) : nlohmann::json(nullptr);
    if (!l.note.empty()) line["note"] = l.note;
    out.push_back(line);
  }
  return out;
}

} // namespace tgh::cli
