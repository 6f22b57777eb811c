#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kuni {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInvalidInput = 2,
  kExitResourceLimit = 3,
};

/// Runs the command line given without the program name, e.g.
/// {"verify", "--p", "5", "--n", "6", "--k", "2"}. Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kuni
