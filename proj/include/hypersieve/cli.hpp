#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersieve {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitSuccess = 0,       ///< checks passed, or a counterexample was found
  kExitInconclusive = 1,  ///< a check failed, or no counterexample within budget
  kExitUsage = 2,         ///< malformed arguments or input
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypersieve
