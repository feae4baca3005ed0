#pragma once

#include <string>
#include <vector>

namespace qtr::cli {

/// Exit codes: 0 success or affirmative answer, 1 negative answer, 2 input
/// error, 3 field or feature limitation, 4 search budget exceeded.
enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kInputError = 2,
  kLimitation = 3,
  kBudgetExceeded = 4,
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string output;       // stdout
  std::string diagnostics;  // stderr
};

/// Runs one command; `args` excludes the program name. Never throws.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace qtr::cli
