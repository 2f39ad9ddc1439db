#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tgh::cli {

/// Exit codes: 0 success, 1 input error, 2 certification failure.
enum ExitCode
{
  Success = 0,
  InputError = 1,
  CertificationFailure = 2,
};

/// Runs one command line (without the program name). The report goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace tgh::cli
