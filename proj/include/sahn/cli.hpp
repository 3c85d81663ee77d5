#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sahn {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,    // I/O, parse or data errors
  exit_illegal_pair = 2,   // algorithm/method combination or usage error
  exit_invalid = 3,        // validation verdict Invalid
};

/// Entry point of the command-line tool; args excludes the program name.
/// Subcommands: cluster, validate, bench.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sahn
