#pragma once

#include <json.hpp>

#include "tgh/cli/catalog.hpp"

namespace tgh::cli {

/// One named check: value compared against a bound.
struct LedgerLine
{
  std::string check;
  double value = 0.0;
  double bound = 0.0;
  bool below = true; ///< pass when value < bound (else when value > bound)
  bool pass = false;
  std::string note;
};

/// Runs every residual check that applies to the catalog entry.
std::vector<LedgerLine> verify_entry(const CatalogEntry & entry, const Tolerances & tol);

nlohmann::json ledger_to_json(const std::vector<LedgerLine> & ledger);

} // namespace tgh::cli
