#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tgh/lie_algebra.hpp"

namespace tgh::cli {

struct AlgebraDocument
{
  MetricLieAlgebra algebra;
  std::vector<std::string> basis;
};

/// Parses {"dim", "basis"?, "brackets", "gram"}. Throws SyntaxError (naming
/// the offending entry), JacobiViolation or NotPositiveDefinite.
AlgebraDocument parse_algebra_file(const std::string & text, const Tolerances & tol = {});

/// Inverse of parse_algebra_file; only nonzero bracket pairs are written.
nlohmann::json algebra_to_json(const MetricLieAlgebra & M, const std::vector<std::string> & basis);

/// e1 .. en
std::vector<std::string> default_basis_names(int n);

} // namespace tgh::cli
