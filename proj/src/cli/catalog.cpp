#include "tgh/cli/catalog.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "tgh/errors.hpp"
#include "tgh/standard_algebras.hpp"
#include "tgh/standard_metrics.hpp"

namespace tgh::cli {

namespace {

double parse_number(const std::string & text, const std::string & what)
{
  double v = 0.0;
  const char * end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
    throw BadParams("cannot read " + what + " from \"" + text + "\"");
  }
  return v;
}

int integer_param(const std::map<std::string, double> & p, const std::string & key, int fallback, int lo)
{
  const auto it = p.find(key);
  if (it == p.end()) return fallback;
  if (it->second != std::floor(it->second) || it->second < lo || it->second > 64) {
    throw BadParams(key + " must be an integer >= " + std::to_string(lo));
  }
  return static_cast<int>(it->second);
}

double real_param(const std::map<std::string, double> & p, const std::string & key, double fallback)
{
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void check_keys(const std::string & name, const std::map<std::string, double> & p, const std::set<std::string> & allowed)
{
  for (const auto & [key, value] : p) {
    if (!allowed.count(key)) throw BadParams(name + " has no parameter \"" + key + "\"");
  }
}

std::vector<std::string> numbered(const std::string & stem, int n)
{
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

} // namespace

const std::vector<std::string> & catalog_names()
{
  static const std::vector<std::string> names{"sl2",         "nonhomo",    "heisenberg", "abelian",
                                              "hyperbolic2", "twisted-h2", "euclidean"};
  return names;
}

CatalogEntry catalog_lookup(const std::string & name, const std::map<std::string, double> & params,
                            const Tolerances & tol)
{
  CatalogEntry e;
  e.name = name;
  e.params = params;
  if (name == "sl2") {
    check_keys(name, params, {"a", "b", "abelian"});
    const double a = real_param(params, "a", 1.0);
    const double b = real_param(params, "b", 1.0);
    const int extra = integer_param(params, "abelian", 0, 0);
    e.params = {{"a", a}, {"b", b}, {"abelian", extra}};
    e.algebra = sl2_algebra(a, b, tol);
    e.basis = {"E1", "E2", "E3"};
    if (extra > 0) {
      e.algebra = orthogonal_sum(*e.algebra, abelian_algebra(extra, tol));
      for (const std::string & s : numbered("A", extra)) e.basis.push_back(s);
    }
  } else if (name == "nonhomo") {
    check_keys(name, params, {});
    e.algebra = nonhomo_algebra(tol);
    e.basis = {"Z", "X1", "X2", "Y"};
    e.metric = nonhomo_metric();
  } else if (name == "heisenberg") {
    check_keys(name, params, {});
    e.algebra = heisenberg_algebra(tol);
    e.basis = {"X", "Y", "Z"};
  } else if (name == "abelian" || name == "euclidean") {
    check_keys(name, params, {"n"});
    const int n = integer_param(params, "n", 3, 1);
    e.params = {{"n", n}};
    e.algebra = abelian_algebra(n, tol);
    e.basis = numbered("e", n);
    if (name == "euclidean") e.metric = euclidean_metric(n);
  } else if (name == "hyperbolic2") {
    check_keys(name, params, {});
    e.algebra = hyperbolic_plane_algebra(1.0, tol);
    e.basis = {"Z", "Y"};
    e.metric = hyperbolic_polar_metric();
  } else if (name == "twisted-h2") {
    check_keys(name, params, {"kappa"});
    const double kappa = real_param(params, "kappa", 1.0);
    if (!(kappa != 0.0)) throw BadParams("twisted-h2 needs kappa != 0");
    e.params = {{"kappa", kappa}};
    e.twisted = twisted_h2_spec(kappa);
    e.metric = build_twisted_product(*e.twisted);
    e.algebra = sl2_algebra(kappa / 2.0, 0.5, tol);
    e.basis = {"E1", "E2", "E3"};
  } else {
    throw UnknownName("no catalog entry named \"" + name + "\"");
  }
  for (auto & [key, value] : e.params) {
    if (!std::isfinite(value)) throw BadParams(key + " must be finite");
  }
  return e;
}

CatalogEntry catalog_lookup(const std::string & spec, const Tolerances & tol)
{
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::map<std::string, double> params;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      const std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw BadParams("parameter \"" + item + "\" is not key=value");
      const std::string key = item.substr(0, eq);
      if (params.count(key)) throw BadParams("parameter \"" + key + "\" given twice");
      params[key] = parse_number(item.substr(eq + 1), key);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return catalog_lookup(name, params, tol);
}

} // namespace tgh::cli
