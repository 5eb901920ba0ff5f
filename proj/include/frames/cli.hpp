#pragma once

#include <ostream>
#include <span>
#include <string>

namespace frames::cli {

enum ExitCode : int {
  kOk = 0,
  kClaimViolated = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

/// Runs one invocation.  `args` excludes the program name.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace frames::cli
