#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace basekit::cli {

enum ExitCode : int {
  kOk = 0,
  kHypothesis = 1,
  kBudget = 2,
  kParse = 3,
};

/// Parses `args` (without the program name), runs one subcommand and writes
/// its report to `out`. Errors go to `err` as a single line
/// "error: <kind>: <message>". Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace basekit::cli
