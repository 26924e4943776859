#pragma once

#include <ostream>
#include <span>
#include <string>

namespace ncpart::cli {

enum ExitCode : int {
  kSuccess = 0,
  // A checked identity or count did not hold.
  kVerificationFailed = 1,
  // Bad flags, malformed input or an exceeded budget.
  kUsageError = 2,
};

/// Runs one command. `args` excludes the program name. Results go to `out`;
/// diagnostics are a single line on `err`.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace ncpart::cli
