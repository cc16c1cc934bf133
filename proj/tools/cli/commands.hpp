#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cli/exit_codes.hpp"

namespace eqa::cli {

struct GenerateOptions {
  std::int64_t p = 0;
  std::string format = "bits";  // bits | json | positions
};

struct LcOptions {
  std::optional<std::int64_t> p;
  std::optional<std::string> file;
  std::optional<std::int64_t> period;
  std::string method = "both";  // bm | gcd | both
  std::string format = "text";  // text | json
};

struct KlcOptions {
  std::int64_t p = 0;
  std::string engine = "structured";  // structured | bruteforce
  std::optional<std::int64_t> max_k;
  std::optional<std::uint64_t> budget;
  std::string format = "table";  // table | json
};

struct VerifyOptions {
  std::int64_t p = 0;
};

struct ScanOptions {
  std::int64_t p_min = 5;
  std::int64_t p_max = 50;
  std::string format = "csv";  // csv | json
};

// Each command writes its payload to `out` and diagnostics (including
// elapsed_ms) to `err`, and returns a process exit code.
int run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);
int run_lc(const LcOptions& opt, std::ostream& out, std::ostream& err);
int run_klc(const KlcOptions& opt, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int run_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err);

// Brute-force budget: --budget, else $EQA_BUDGET, else 10^8. Throws
// InvalidArgument on a malformed environment value.
std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag);

}  // namespace eqa::cli
