#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace auit {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitConfig = 3,
  kExitIo = 4,
};

/// Subcommands: run, sweep, compare, complexity. `args` excludes the program
/// name. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace auit
