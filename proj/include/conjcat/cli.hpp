#pragma once

#include <ostream>

namespace conjcat {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitYes = 0,     // member, derivable, check passed, or plain success
  kExitNo = 1,      // question answered negatively
  kExitUsage = 2,   // bad arguments, unreadable or malformed input
  kExitBudget = 3,  // work budget exhausted before an answer
};

// Environment variable holding the default work budget.
inline constexpr const char* kBudgetEnv = "CONJCAT_BUDGET";

int cli_main(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace conjcat
