#pragma once

#include <string>
#include <vector>

#include "eqa/numtheory.hpp"

namespace eqa::cli {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

// Instantiates every quotient, weight, factorization, divisibility, linear
// complexity and k-error property at `params`. Closed-form checks are
// skipped when their hypothesis fails.
std::vector<CheckResult> run_checks(const PrimeParams& params);

}  // namespace eqa::cli
