#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperdiff::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kParseError = 1,
  kKindMismatch = 2,
  kClosureViolation = 3,
  kParityViolation = 4,
};

/// Runs the `hyperdiff` command line. `args` excludes the program name.
/// Reports go to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperdiff::cli
