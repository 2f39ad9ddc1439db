#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgh/products.hpp"

namespace tgh::cli {

/// A built-in model: a metric Lie algebra, a coordinate metric, or both.
struct CatalogEntry
{
  std::string name;
  std::map<std::string, double> params;
  std::vector<std::string> basis;
  std::optional<MetricLieAlgebra> algebra;
  std::optional<CoordinateMetric> metric;
  std::optional<TwistedProductSpec> twisted;
};

/// sl2, nonhomo, heisenberg, abelian, hyperbolic2, twisted-h2, euclidean.
const std::vector<std::string> & catalog_names();

/// Throws UnknownName or BadParams (unknown parameter, a * b = 0, kappa = 0, ...).
CatalogEntry catalog_lookup(const std::string & name, const std::map<std::string, double> & params,
                            const Tolerances & tol = {});

/// "name" or "name:key=value,key=value".
CatalogEntry catalog_lookup(const std::string & spec, const Tolerances & tol = {});

} // namespace tgh::cli
