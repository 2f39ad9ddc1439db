#include "tgh/cli/algebra_file.hpp"

#include <set>

#include "tgh/errors.hpp"

namespace tgh::cli {

using nlohmann::json;

namespace {

double number(const json & v, const std::string & where)
{
  if (!v.is_number()) throw SyntaxError(where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw SyntaxError(where + " must be finite");
  return x;
}

void only_keys(const json & obj, const std::set<std::string> & allowed, const std::string & where)
{
  for (const auto & item : obj.items()) {
    if (!allowed.count(item.key())) throw SyntaxError(where + ": unknown key \"" + item.key() + "\"");
  }
}

} // namespace

std::vector<std::string> default_basis_names(int n)
{
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

AlgebraDocument parse_algebra_file(const std::string & text, const Tolerances & tol)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error & e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SyntaxError("top level must be an object");
  only_keys(doc, {"dim", "basis", "brackets", "gram"}, "algebra file");
  for (const char * key : {"dim", "brackets", "gram"}) {
    if (!doc.contains(key)) throw SyntaxError(std::string("missing key \"") + key + "\"");
  }

  if (!doc["dim"].is_number_integer()) throw SyntaxError("dim must be an integer");
  const int n = doc["dim"].get<int>();
  if (n < 2 || n > 8) throw SyntaxError("dim must lie in [2, 8], got " + std::to_string(n));

  std::vector<std::string> basis = default_basis_names(n);
  if (doc.contains("basis")) {
    const json & b = doc["basis"];
    if (!b.is_array() || static_cast<int>(b.size()) != n) {
      throw SyntaxError("basis must be an array of " + std::to_string(n) + " names");
    }
    std::set<std::string> seen;
    for (int i = 0; i < n; ++i) {
      if (!b[i].is_string()) throw SyntaxError("basis[" + std::to_string(i) + "] must be a string");
      basis[i] = b[i].get<std::string>();
      if (!seen.insert(basis[i]).second) throw SyntaxError("basis name \"" + basis[i] + "\" repeated");
    }
  }

  StructureConstants c(n);
  const json & brackets = doc["brackets"];
  if (!brackets.is_array()) throw SyntaxError("brackets must be an array");
  std::set<std::pair<int, int>> pairs;
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string where = "brackets[" + std::to_string(e) + "]";
    const json & entry = brackets[e];
    if (!entry.is_object()) throw SyntaxError(where + " must be an object");
    only_keys(entry, {"i", "j", "coeffs"}, where);
    if (!entry.contains("i") || !entry.contains("j") || !entry.contains("coeffs")) {
      throw SyntaxError(where + " needs i, j and coeffs");
    }
    if (!entry["i"].is_number_integer() || !entry["j"].is_number_integer()) {
      throw SyntaxError(where + ": i and j must be integers");
    }
    const int i = entry["i"].get<int>();
    const int j = entry["j"].get<int>();
    if (i < 0 || j >= n || i >= j) {
      throw SyntaxError(where + ": need 0 <= i < j < dim, got i=" + std::to_string(i) + ", j=" + std::to_string(j));
    }
    if (!pairs.insert({i, j}).second) throw SyntaxError(where + ": pair (" + std::to_string(i) + ", " +
                                                        std::to_string(j) + ") given twice");
    const json & coeffs = entry["coeffs"];
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != n) {
      throw SyntaxError(where + ": coeffs must hold " + std::to_string(n) + " numbers");
    }
    Vector v(n);
    for (int k = 0; k < n; ++k) v(k) = number(coeffs[k], where + ".coeffs[" + std::to_string(k) + "]");
    c.set_bracket(i, j, v);
  }

  const json & gram = doc["gram"];
  if (!gram.is_array() || static_cast<int>(gram.size()) != n) {
    throw SyntaxError("gram must be an array of " + std::to_string(n) + " rows");
  }
  Matrix G(n, n);
  for (int r = 0; r < n; ++r) {
    if (!gram[r].is_array() || static_cast<int>(gram[r].size()) != n) {
      throw SyntaxError("gram[" + std::to_string(r) + "] must hold " + std::to_string(n) + " numbers");
    }
    for (int s = 0; s < n; ++s) G(r, s) = number(gram[r][s], "gram[" + std::to_string(r) + "][" + std::to_string(s) + "]");
  }
  if ((G - G.transpose()).cwiseAbs().maxCoeff() > tol.symmetry) throw SyntaxError("gram is not symmetric");

  return {MetricLieAlgebra(LieAlgebra(c, tol), G, tol), basis};
}

json algebra_to_json(const MetricLieAlgebra & M, const std::vector<std::string> & basis)
{
  const int n = M.dim();
  json brackets = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vector v = M.algebra().constants().bracket_of_basis(i, j);
      if (v.cwiseAbs().maxCoeff() == 0.0) continue;
      brackets.push_back({{"i", i}, {"j", j}, {"coeffs", std::vector<double>(v.data(), v.data() + n)}});
    }
  json gram = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int s = 0; s < n; ++s) row.push_back(M.gram()(r, s));
    gram.push_back(row);
  }
  return {{"dim", n}, {"basis", basis}, {"brackets", brackets}, {"gram", gram}};
}

} // namespace tgh::cli
