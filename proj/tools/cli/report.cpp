#include "cli/report.hpp"

#include <chrono>
#include <sstream>

#include "eqa/sequence.hpp"

namespace eqa::cli {

AnalysisReport analyze(const PrimeParams& params, bool with_profile) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.params = params;
  const auto seq = generate(params);
  r.weight = seq.weight();
  r.lc_bm = berlekamp_massey(seq).lc;
  r.lc_gcd = lc_gcd(seq).lc;
  r.lc_methods_agree = r.lc_bm == r.lc_gcd;
  r.lc = r.lc_gcd;
  if (with_profile && params.two_primitive_root_mod_p2) {
    r.profile = k_error_lc_structured(seq, params.p);
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

nlohmann::json to_json(const KErrorProfile& profile) {
  nlohmann::json bps = nlohmann::json::array();
  for (const auto& bp : profile.breakpoints) {
    bps.push_back({{"k", bp.k}, {"lc", bp.lc}});
  }
  nlohmann::json j{{"breakpoints", bps}, {"weight", profile.weight}};
  if (profile.k_limit) j["k_max"] = *profile.k_limit;
  return j;
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["p"] = r.params.p;
  j["period"] = r.params.period;
  j["flags"] = {{"p_mod_4", r.params.p_mod_4},
                {"primitive_root", r.params.two_primitive_root_mod_p2},
                {"non_wieferich", r.params.non_wieferich}};
  j["weight"] = r.weight;
  j["lc"] = r.lc;
  j["lc_methods_agree"] = r.lc_methods_agree;
  j["profile"] = r.profile ? to_json(*r.profile) : nlohmann::json(nullptr);
  return j;
}

std::string profile_cell(const std::optional<KErrorProfile>& profile) {
  if (!profile) return "n/a";
  std::ostringstream os;
  for (std::size_t i = 0; i < profile->breakpoints.size(); ++i) {
    if (i) os << ';';
    os << profile->breakpoints[i].k << ':' << profile->breakpoints[i].lc;
  }
  return os.str();
}

std::string csv_row(const AnalysisReport& r) {
  std::ostringstream os;
  os << r.params.p << ',' << r.params.p_mod_4 << ','
     << (r.params.two_primitive_root_mod_p2 ? "true" : "false") << ','
     << (r.params.non_wieferich ? "true" : "false") << ',' << r.weight << ','
     << r.lc << ',' << profile_cell(r.profile);
  return os.str();
}

}  // namespace eqa::cli
