#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobtrace::cli {

enum ExitCode : int {
  kSuccess = 0,
  kArgumentError = 2,
  kPreconditionViolation = 3,
  kResourceCeiling = 4,
  kNumericFailure = 5,
};

/// Parses `argv`, runs exactly one subcommand and writes its report to
/// `--output` (or `out`). Diagnostics and structured errors go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobtrace::cli
