#pragma once

namespace eqa::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kMethodDisagreement = 3,
  kPreconditionFailed = 4,
  kBudgetExhausted = 5,
};

}  // namespace eqa::cli
