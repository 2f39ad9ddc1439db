#include "tgh/cli/app.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tgh/classify.hpp"
#include "tgh/cli/algebra_file.hpp"
#include "tgh/cli/catalog.hpp"
#include "tgh/cli/report.hpp"
#include "tgh/cli/verify.hpp"
#include "tgh/csv.hpp"
#include "tgh/curvature.hpp"
#include "tgh/errors.hpp"
#include "tgh/helix.hpp"
#include "tgh/search.hpp"
#include "tgh/tg_analysis.hpp"

namespace tgh::cli {

using nlohmann::json;

namespace {

struct Options
{
  std::string algebra_file;
  std::string builtin;
  std::string subspace;
  std::string normal;
  std::string x0;
  std::string v0;
  double tmax = 1.0;
  std::optional<double> step;
  int pmax = -1;
  std::string out;
  std::string csv;
  std::vector<std::string> tols;
  std::optional<std::uint64_t> seed;
  bool compact = false;
  std::string target;
};

/// Raised for a completed run whose certificate failed; the report is filled.
struct CertificationFailed
{
};

std::vector<double> json_vector(const Vector & v)
{
  return std::vector<double>(v.data(), v.data() + v.size());
}

json json_columns(const Matrix & m)
{
  json cols = json::array();
  for (int c = 0; c < m.cols(); ++c) cols.push_back(json_vector(m.col(c)));
  return cols;
}

Vector parse_vector(const std::string & text, const std::string & what)
{
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    double v = 0.0;
    const char * end = item.data() + item.size();
    const auto res = std::from_chars(item.data(), end, v);
    if (item.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
      throw InvalidArgument("cannot read a number from \"" + item + "\" in " + what);
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

Matrix parse_columns(const std::string & text, int n, const std::string & what)
{
  std::vector<Vector> cols;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    cols.push_back(parse_vector(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start), what));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  Matrix m(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != n) {
      throw DimensionMismatch(what + " vectors must have " + std::to_string(n) + " entries");
    }
    m.col(static_cast<Eigen::Index>(c)) = cols[c];
  }
  return m;
}

struct Source
{
  std::optional<MetricLieAlgebra> algebra;
  std::vector<std::string> basis;
  std::optional<CatalogEntry> entry;
};

Source load_source(const Options & opt, Report & report)
{
  if (opt.algebra_file.empty() == opt.builtin.empty()) {
    throw InvalidArgument("give exactly one of --algebra FILE and --builtin NAME");
  }
  Source src;
  if (!opt.builtin.empty()) {
    src.entry = catalog_lookup(opt.builtin, report.tolerances);
    src.algebra = src.entry->algebra;
    src.basis = src.entry->basis;
    report.input["builtin"] = {{"name", src.entry->name}, {"params", src.entry->params}};
  } else {
    std::ifstream in(opt.algebra_file, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open algebra file " + opt.algebra_file);
    std::stringstream text;
    text << in.rdbuf();
    AlgebraDocument doc = parse_algebra_file(text.str(), report.tolerances);
    report.input["algebra"] = algebra_to_json(doc.algebra, doc.basis);
    src.algebra = std::move(doc.algebra);
    src.basis = std::move(doc.basis);
  }
  return src;
}

const MetricLieAlgebra & need_algebra(const Source & src)
{
  if (!src.algebra) throw InvalidArgument("this model has no Lie algebra");
  return *src.algebra;
}

Vector need_normal(const Options & opt, const MetricLieAlgebra & M, Report & report)
{
  if (opt.normal.empty()) throw InvalidArgument("--normal is required");
  const Vector T = parse_vector(opt.normal, "--normal");
  if (T.size() != M.dim()) throw DimensionMismatch("--normal must have " + std::to_string(M.dim()) + " entries");
  report.input["normal"] = json_vector(T);
  return T;
}

json frenet_json(const FrenetData & F)
{
  return {{"order", F.order},
          {"curvatures", F.curvatures},
          {"frame", json_columns(F.frame)},
          {"near_zero_warning", F.near_zero_warning}};
}

void cmd_info(const Options & opt, Report & report)
{
  const Source src = load_source(opt, report);
  const MetricLieAlgebra & M = need_algebra(src);
  report.result = algebra_to_json(M, src.basis);
  const CharacterSpace chars = character_space(M.algebra(), report.tolerances);
  report.result["derived_dim"] = chars.derived_dim;
  report.result["character_dim"] = chars.dim();
  report.result["onb_change"] = json_columns(M.onb_change());
  if (src.entry && src.entry->metric) report.result["coordinate_dim"] = src.entry->metric->dim;
  report.residuals["jacobi_residual"] = jacobi_residual(M.algebra());
  report.residuals["frame_residual"] = M.frame_residual();
}

void cmd_curvature(const Options & opt, Report & report)
{
  const Source src = load_source(opt, report);
  const MetricLieAlgebra & M = need_algebra(src);
  const int n = M.dim();
  const ConnectionTable gamma = levi_civita(M);
  const CurvatureData R = curvature_tensor(M);
  report.result["operator_eigenvalues"] = json_vector(R.eigenvalues());
  json planes = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      planes.push_back({{"i", i}, {"j", j}, {"value", sectional(M, R, Vector::Unit(n, i), Vector::Unit(n, j), report.tolerances)}});
    }
  report.result["sectional"] = planes;
  report.residuals["torsion_residual"] = gamma.torsion_residual(M.frame_constants());
  report.residuals["metric_compatibility_residual"] = gamma.metric_residual();
  report.residuals["curvature_symmetry_residual"] = R.symmetry_residual();
  report.residuals["bianchi_residual"] = R.bianchi_residual();
  report.residuals["operator_reconstruction_residual"] = R.reconstruction_residual();
}

void cmd_tg_check(const Options & opt, Report & report)
{
  const Source src = load_source(opt, report);
  const MetricLieAlgebra & M = need_algebra(src);
  const Tolerances & tol = report.tolerances;
  if (opt.subspace.empty() == opt.normal.empty()) throw InvalidArgument("give exactly one of --subspace and --normal");
  bool ok = false;
  if (!opt.subspace.empty()) {
    const Matrix basis = parse_columns(opt.subspace, M.dim(), "--subspace");
    report.input["subspace"] = json_columns(basis);
    const SubspaceCheck c = tg_subspace_check(M, Subspace::orthonormalized(M, basis, tol), tol);
    ok = c.totally_geodesic;
    report.result["kind"] = "subspace";
    report.result["totally_geodesic"] = ok;
    report.residuals["residual"] = c.residual;
    report.residuals["bracket_residual"] = c.bracket_residual;
    report.residuals["connection_residual"] = c.connection_residual;
    if (c.witness) {
      report.result["witness"] = {{"first", c.witness->first},
                                  {"second", c.witness->second},
                                  {"normal_component", json_vector(c.witness->normal_component)}};
    }
  } else {
    const Vector T = need_normal(opt, M, report);
    const double r = hyperplane_tg_residual(M, T, tol);
    ok = r < tol.totally_geodesic;
    report.result["kind"] = "hyperplane";
    report.result["totally_geodesic"] = ok;
    report.residuals["residual"] = r;
    report.residuals["codazzi_residual"] = codazzi_residual(M, T, tol);
  }
  if (!ok) throw CertificationFailed{};
}

void cmd_frenet(const Options & opt, Report & report)
{
  const Source src = load_source(opt, report);
  const MetricLieAlgebra & M = need_algebra(src);
  const Vector T = need_normal(opt, M, report);
  const int pmax = opt.pmax < 0 ? M.dim() - 1 : opt.pmax;
  report.input["pmax"] = pmax;
  const FrenetData F = frenet_orbit(M, T, pmax, report.tolerances);
  report.result = frenet_json(F);
  report.residuals["truncation_residual"] = F.truncation_residual;
  report.residuals["recursion_residual"] = F.recursion_residual;
  report.residuals["orthonormality_residual"] = F.orthonormality_residual;
}

void cmd_classify(const Options & opt, Report & report)
{
  const Source src = load_source(opt, report);
  const MetricLieAlgebra & M = need_algebra(src);
  const Vector T = need_normal(opt, M, report);
  ClassificationReport C;
  try {
    C = classify_case(M, T, report.tolerances);
  } catch (const NotTotallyGeodesic & e) {
    report.result["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    report.residuals["tg_residual"] = e.value();
    throw CertificationFailed{};
  }
  report.case_tag = to_string(C.case_tag);
  report.result["frenet"] = frenet_json(C.frenet);
  report.result["warnings"] = C.warnings;
  report.result["eigen_block_eigenvalues"] = C.eigen_block.eigenvalues;
  report.residuals["tg_residual"] = C.tg_residual;
  report.residuals["codazzi_residual"] = C.codazzi_residual;
  report.residuals["eigenvector_residual"] = C.eigen_block.eigenvector_residual;
  if (C.eigenvalue_lambda) report.result["eigenvalue_lambda"] = *C.eigenvalue_lambda;
  if (C.character_hint) report.result["character_hint"] = json_vector(*C.character_hint);
  if (C.character_residual) report.residuals["character_residual"] = *C.character_residual;
  if (C.witness) {
    const HelixWitness & W = *C.witness;
    json q = json::array();
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) q.push_back({{"i", i}, {"j", j}, {"coeffs", json_vector(W.quotient.bracket_of_basis(i, j))}});
    report.result["witness"] = {{"T", json_vector(W.T)},
                                {"N1", json_vector(W.N1)},
                                {"N2", json_vector(W.N2)},
                                {"ideal", json_columns(W.ideal.basis())},
                                {"quotient_brackets", q},
                                {"recovered_a", W.recovered_a},
                                {"recovered_b", W.recovered_b}};
    for (const auto & [name, value] : W.residuals) report.residuals[name] = value;
  }
  if (C.case_tag == CaseTag::HigherOrder) throw CertificationFailed{};
}

void cmd_search(const Options & opt, Report & report)
{
  const Source src = load_source(opt, report);
  const MetricLieAlgebra & M = need_algebra(src);
  const SearchResult S = search_tg_hyperplanes(M, report.tolerances);
  json normals = json::array();
  for (const Vector & v : S.normals) normals.push_back(json_vector(v));
  report.result["normals"] = normals;
  report.result["converged_seeds"] = S.converged_seeds;
  report.result["continuum_detected"] = S.continuum_detected;
  double worst = 0.0;
  for (double r : S.residuals) worst = std::max(worst, r);
  report.result["residuals"] = S.residuals;
  report.residuals["max_residual"] = worst;
}

void cmd_geodesic(const Options & opt, Report & report)
{
  const Source src = load_source(opt, report);
  if (!src.entry || !src.entry->metric) throw InvalidArgument("geodesic needs a --builtin model with a coordinate metric");
  const CoordinateMetric & CM = *src.entry->metric;
  if (opt.x0.empty() || opt.v0.empty()) throw InvalidArgument("--x0 and --v0 are required");
  const Vector x0 = parse_vector(opt.x0, "--x0"), v0 = parse_vector(opt.v0, "--v0");
  const double step = opt.step.value_or(report.tolerances.rk4_step);
  report.input["x0"] = json_vector(x0);
  report.input["v0"] = json_vector(v0);
  report.input["tmax"] = opt.tmax;
  report.input["step"] = step;
  GeodesicTrajectory g;
  try {
    g = geodesic_integrate(CM, x0, v0, opt.tmax, step, report.tolerances.speed_drift);
  } catch (const StepRejected & e) {
    report.result["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    throw CertificationFailed{};
  }
  report.result["samples"] = g.times.size();
  report.result["step"] = g.step;
  report.result["end_point"] = json_vector(g.points.back());
  report.result["end_velocity"] = json_vector(g.velocities.back());
  report.residuals["speed_drift"] = g.max_speed_drift;
  if (!opt.csv.empty()) {
    std::ofstream csv(opt.csv, std::ios::binary);
    if (!csv) throw InvalidArgument("cannot write " + opt.csv);
    write_trajectory_csv(csv, g);
    report.result["csv"] = opt.csv;
  }
}

void cmd_verify(const Options & opt, Report & report)
{
  std::vector<std::string> targets;
  if (opt.target == "all") {
    targets = catalog_names();
  } else {
    targets.push_back(opt.target);
  }
  report.input["target"] = opt.target;
  bool all = true;
  json entries = json::object();
  for (const std::string & t : targets) {
    const CatalogEntry entry = catalog_lookup(t, report.tolerances);
    const std::vector<LedgerLine> ledger = verify_entry(entry, report.tolerances);
    bool pass = true;
    for (const LedgerLine & l : ledger) {
      pass = pass && l.pass;
      report.residuals[entry.name + "." + l.check] = l.value;
    }
    all = all && pass;
    entries[entry.name] = {{"params", entry.params}, {"pass", pass}, {"ledger", ledger_to_json(ledger)}};
  }
  report.result["entries"] = entries;
  report.result["pass"] = all;
  if (!all) throw CertificationFailed{};
}

void add_source_options(CLI::App * cmd, Options & opt)
{
  cmd->add_option("--algebra", opt.algebra_file, "algebra JSON file");
  cmd->add_option("--builtin", opt.builtin, "catalog model, NAME[:key=value,...]");
}

void add_common_options(CLI::App * cmd, Options & opt)
{
  cmd->add_option("--tol", opt.tols, "tolerance override NAME=VALUE (repeatable)");
  cmd->add_option("--seed", opt.seed, "search seed");
  cmd->add_option("--out", opt.out, "write the report to FILE");
  cmd->add_flag("--json", opt.compact, "compact single-line JSON");
}

void apply_tolerances(const Options & opt, Tolerances & tol)
{
  for (const std::string & item : opt.tols) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("--tol expects NAME=VALUE, got \"" + item + "\"");
    const std::string name = item.substr(0, eq);
    const Vector v = parse_vector(item.substr(eq + 1), "--tol " + name);
    if (v.size() != 1 || !tol.set(name, v(0))) throw InvalidArgument("unknown or invalid tolerance \"" + name + "\"");
  }
  if (opt.seed) tol.seed = *opt.seed;
}

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  Options opt;
  CLI::App app{"Totally geodesic hypersurfaces of Lie groups with left-invariant metrics", "tghkit"};
  app.require_subcommand(1);

  auto * info = app.add_subcommand("info", "structure of a metric Lie algebra");
  auto * curvature = app.add_subcommand("curvature", "curvature operator and sectional curvatures");
  auto * tg = app.add_subcommand("tg-check", "certify a subspace or hyperplane as totally geodesic");
  auto * frenet = app.add_subcommand("frenet", "Frenet data of the orbit of a normal");
  auto * classify = app.add_subcommand("classify", "classify a totally geodesic normal");
  auto * search = app.add_subcommand("search", "search for totally geodesic hyperplanes");
  auto * geodesic = app.add_subcommand("geodesic", "integrate a geodesic of a coordinate metric");
  auto * verify = app.add_subcommand("verify", "run every residual check on a catalog entry");
  for (auto * cmd : {info, curvature, tg, frenet, classify, search, geodesic}) add_source_options(cmd, opt);
  for (auto * cmd : {info, curvature, tg, frenet, classify, search, geodesic, verify}) add_common_options(cmd, opt);
  tg->add_option("--subspace", opt.subspace, "basis vectors \"v1;v2;...\"");
  for (auto * cmd : {tg, frenet, classify}) cmd->add_option("--normal", opt.normal, "unit normal \"c1,...,cn\"");
  frenet->add_option("--pmax", opt.pmax, "largest Frenet order (default n-1)");
  geodesic->add_option("--x0", opt.x0, "initial point")->required();
  geodesic->add_option("--v0", opt.v0, "initial velocity")->required();
  geodesic->add_option("--tmax", opt.tmax, "duration");
  geodesic->add_option("--step", opt.step, "RK4 step");
  geodesic->add_option("--csv", opt.csv, "write the trajectory as CSV");
  verify->add_option("target", opt.target, "catalog entry (NAME[:params]) or \"all\"")->required();

  Report report;
  auto emit = [&](int code) -> int {
    const json doc = report.to_json();
    const std::string text = opt.compact ? doc.dump() : doc.dump(2);
    if (!opt.out.empty()) {
      std::ofstream file(opt.out, std::ios::binary);
      if (!file) {
        err << "cannot write " << opt.out << "\n";
        out << text << "\n";
        return InputError;
      }
      file << text << "\n";
    } else {
      out << text << "\n";
    }
    return code;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return Success;
  } catch (const CLI::ParseError & e) {
    err << e.what() << "\n";
    report.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    report.result["error"] = {{"kind", "UsageError"}, {"message", e.what()}};
    opt.out.clear();
    return emit(InputError);
  }

  CLI::App * cmd = app.get_subcommands().front();
  report.command = cmd->get_name();
  report.input["command"] = report.command;
  try {
    apply_tolerances(opt, report.tolerances);
    report.input["tolerances"] = report.tolerances.as_map();
    if (cmd == info) cmd_info(opt, report);
    else if (cmd == curvature) cmd_curvature(opt, report);
    else if (cmd == tg) cmd_tg_check(opt, report);
    else if (cmd == frenet) cmd_frenet(opt, report);
    else if (cmd == classify) cmd_classify(opt, report);
    else if (cmd == search) cmd_search(opt, report);
    else if (cmd == geodesic) cmd_geodesic(opt, report);
    else if (cmd == verify) cmd_verify(opt, report);
  } catch (const CertificationFailed &) {
    return emit(CertificationFailure);
  } catch (const Error & e) {
    json error{{"kind", e.kind()}, {"message", e.what()}};
    if (const auto * v = dynamic_cast<const ValuedError *>(&e); v && std::isfinite(v->value())) error["value"] = v->value();
    report.result = {{"error", error}};
    err << e.kind() << ": " << e.what() << "\n";
    return emit(InputError);
  }
  return emit(Success);
}

} // namespace tgh::cli
