#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symrep {

enum ExitCode : int {
  exit_ok = 0,
  exit_parse_error = 2,
  exit_domain_error = 3,
  exit_cap_exceeded = 4,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symrep
