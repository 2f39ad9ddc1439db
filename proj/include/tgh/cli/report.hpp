#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "tgh/tolerances.hpp"

namespace tgh::cli {

/// Sorted keys, shortest round-trip numbers, no whitespace.
std::string canonical_dump(const nlohmann::json & value);

std::string sha256_hex(const std::string & bytes);

struct Report
{
  std::string command;
  nlohmann::json input = nlohmann::json::object(); ///< canonical description of what was run
  nlohmann::json result = nlohmann::json::object();
  std::map<std::string, double> residuals;
  Tolerances tolerances;
  std::optional<std::string> case_tag;

  /// {"command", "input_digest", "result", "residuals", "tolerances_used", "case_tag"?};
  /// non-finite residuals are left out and listed under result.nonfinite_residuals.
  nlohmann::json to_json() const;
};

} // namespace tgh::cli
