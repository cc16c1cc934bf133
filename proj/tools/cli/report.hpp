#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "eqa/lincomplex.hpp"
#include "eqa/numtheory.hpp"

namespace eqa::cli {

struct AnalysisReport {
  PrimeParams params;
  std::size_t weight = 0;
  std::size_t lc = 0;
  std::size_t lc_bm = 0;
  std::size_t lc_gcd = 0;
  bool lc_methods_agree = false;
  std::optional<KErrorProfile> profile;  // only when 2 is a primitive root
  double elapsed_ms = 0.0;               // diagnostic stream only
};

// Generates the sequence for `params` and fills every field. The structured
// profile is attached only when its precondition holds.
AnalysisReport analyze(const PrimeParams& params, bool with_profile);

// Canonical JSON: sorted keys, no timing data.
nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json to_json(const KErrorProfile& profile);

// "0:240;1:222;10:220;50:0", or "n/a".
std::string profile_cell(const std::optional<KErrorProfile>& profile);

inline constexpr const char* kCsvHeader =
    "p,mod4,prim_root,non_wieferich,weight,lc,profile";
std::string csv_row(const AnalysisReport& report);

}  // namespace eqa::cli
