#include "cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/report.hpp"
#include "cli/verify.hpp"
#include "eqa/errors.hpp"
#include "eqa/lincomplex.hpp"
#include "eqa/sequence.hpp"

namespace eqa::cli {

namespace {

using Clock = std::chrono::steady_clock;

PrimeParams checked_prime(std::int64_t p) {
  if (p < 0) throw NotPrime(std::to_string(p) + " is not an odd prime > 3");
  return classify_prime(static_cast<Int>(p));
}

void print_elapsed(std::ostream& err, Clock::time_point start) {
  err << "elapsed_ms: " << std::fixed << std::setprecision(3)
      << std::chrono::duration<double, std::milli>(Clock::now() - start).count()
      << '\n';
}

std::string join_positions(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

void print_profile_table(std::ostream& out, const KErrorProfile& prof) {
  out << std::left << std::setw(14) << "k" << "LC_k\n";
  const auto& bps = prof.breakpoints;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    std::string range;
    if (i + 1 < bps.size()) {
      const std::size_t hi = bps[i + 1].k - 1;
      range = hi == bps[i].k ? std::to_string(hi)
                             : std::to_string(bps[i].k) + ".." + std::to_string(hi);
    } else if (prof.k_limit) {
      range = *prof.k_limit == bps[i].k
                  ? std::to_string(bps[i].k)
                  : std::to_string(bps[i].k) + ".." + std::to_string(*prof.k_limit);
    } else {
      range = ">=" + std::to_string(bps[i].k);
    }
    out << std::left << std::setw(14) << range << bps[i].lc << '\n';
  }
}

// Maps library exceptions onto the exit-code contract.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionFailed;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("EQA_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || env[0] == '-') {
      throw InvalidArgument(std::string("EQA_BUDGET is not a count: ") + env);
    }
    return v;
  }
  return kDefaultBruteForceBudget;
}

int run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    const auto params = checked_prime(opt.p);
    const auto seq = generate(params);
    if (opt.format == "bits") {
      out << format_bits(seq, params.p) << '\n';
    } else if (opt.format == "positions") {
      out << join_positions(seq.one_positions()) << '\n';
    } else if (opt.format == "json") {
      const nlohmann::json j{{"p", params.p},
                             {"period", params.period},
                             {"one_positions", seq.one_positions()}};
      out << j.dump() << '\n';
    } else {
      err << "error: unknown format '" << opt.format << "'\n";
      return static_cast<int>(kInputError);
    }
    print_elapsed(err, start);
    return static_cast<int>(kOk);
  });
}

int run_lc(const LcOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    BinarySequence seq;
    std::optional<PrimeParams> params;
    if (opt.p) params = checked_prime(*opt.p);
    if (opt.file) {
      std::ifstream in(*opt.file);
      if (!in) {
        err << "error: cannot read " << *opt.file << '\n';
        return static_cast<int>(kInputError);
      }
      std::ostringstream text;
      text << in.rdbuf();
      std::size_t period = 0;
      if (opt.period) {
        if (*opt.period <= 0) throw InvalidArgument("--period must be positive");
        period = static_cast<std::size_t>(*opt.period);
      } else if (params) {
        period = params->period;
      } else {
        throw InvalidArgument("--file needs --period (or --p)");
      }
      seq = load_sequence(text.str(), period);
    } else if (params) {
      seq = generate(*params);
    } else {
      throw InvalidArgument("lc needs --p or --file");
    }

    const bool want_bm = opt.method == "bm" || opt.method == "both";
    const bool want_gcd = opt.method == "gcd" || opt.method == "both";
    if (!want_bm && !want_gcd) {
      throw InvalidArgument("unknown method '" + opt.method + "'");
    }
    std::optional<std::size_t> bm, g;
    if (want_bm) bm = berlekamp_massey(seq).lc;
    if (want_gcd) g = lc_gcd(seq).lc;
    const bool agree = !(bm && g) || *bm == *g;

    if (opt.format == "json") {
      nlohmann::json j;
      if (params) j["p"] = params->p;
      j["period"] = seq.period();
      j["weight"] = seq.weight();
      j["lc"] = g ? *g : *bm;
      nlohmann::json methods = nlohmann::json::object();
      if (bm) methods["bm"] = *bm;
      if (g) methods["gcd"] = *g;
      j["methods"] = methods;
      j["lc_methods_agree"] = agree;
      out << j.dump() << '\n';
    } else {
      if (bm) out << "bm:  " << *bm << '\n';
      if (g) out << "gcd: " << *g << '\n';
      out << "lc:  " << (g ? *g : *bm);
      if (bm && g) out << (agree ? " (methods agree)" : " (METHODS DISAGREE)");
      out << '\n';
    }
    print_elapsed(err, start);
    if (!agree) {
      err << "error: Berlekamp-Massey and gcd linear complexity disagree\n";
      return static_cast<int>(kMethodDisagreement);
    }
    return static_cast<int>(kOk);
  });
}

int run_klc(const KlcOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    const auto params = checked_prime(opt.p);
    const auto seq = generate(params);
    KErrorProfile prof;
    if (opt.engine == "structured") {
      prof = k_error_lc_structured(seq, params.p);
    } else if (opt.engine == "bruteforce") {
      if (opt.max_k && *opt.max_k < 0) throw InvalidArgument("--max-k must be >= 0");
      const std::size_t k_max =
          opt.max_k ? static_cast<std::size_t>(*opt.max_k) : seq.weight();
      prof = k_error_lc_bruteforce(seq, k_max, resolve_budget(opt.budget));
    } else {
      throw InvalidArgument("unknown engine '" + opt.engine + "'");
    }

    if (opt.format == "json") {
      nlohmann::json j = to_json(prof);
      j["p"] = params.p;
      j["period"] = params.period;
      j["engine"] = opt.engine;
      out << j.dump() << '\n';
    } else if (opt.format == "table") {
      out << "p = " << params.p << ", period = " << params.period
          << ", weight = " << prof.weight << ", engine = " << opt.engine << '\n';
      print_profile_table(out, prof);
    } else {
      throw InvalidArgument("unknown format '" + opt.format + "'");
    }
    print_elapsed(err, start);
    return static_cast<int>(kOk);
  });
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    const auto params = checked_prime(opt.p);
    out << "p = " << params.p << " (p mod 4 = " << params.p_mod_4
        << ", 2 primitive root mod p^2: "
        << (params.two_primitive_root_mod_p2 ? "yes" : "no")
        << ", non-Wieferich: " << (params.non_wieferich ? "yes" : "no") << ")\n";
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : run_checks(params)) {
      switch (r.status) {
        case CheckStatus::Pass:
          ++pass;
          out << "[PASS] " << r.name << '\n';
          break;
        case CheckStatus::Fail:
          ++fail;
          out << "[FAIL] " << r.name << ": " << r.detail << '\n';
          break;
        case CheckStatus::Skip:
          ++skip;
          out << "[SKIP] " << r.name << " (skipped: " << r.detail << ")\n";
          break;
      }
    }
    out << pass << " passed, " << skip << " skipped, " << fail << " failed\n";
    print_elapsed(err, start);
    return static_cast<int>(fail == 0 ? kOk : kMethodDisagreement);
  });
}

int run_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    if (opt.p_min > opt.p_max || opt.p_max < 0) {
      throw InvalidArgument("bad range: --p-min " + std::to_string(opt.p_min) +
                            " > --p-max " + std::to_string(opt.p_max));
    }
    if (opt.format != "csv" && opt.format != "json") {
      throw InvalidArgument("unknown format '" + opt.format + "'");
    }
    const Int lo = static_cast<Int>(std::max<std::int64_t>(opt.p_min, 5));
    const Int hi = static_cast<Int>(opt.p_max);

    std::vector<AnalysisReport> reports;
    if (lo <= hi) {
      for (Int p : primes_in_range(lo, hi)) {
        auto r = analyze(classify_prime(p), true);
        err << "p=" << p << " elapsed_ms: " << std::fixed << std::setprecision(3)
            << r.elapsed_ms << '\n';
        if (!r.lc_methods_agree) {
          err << "error: linear complexity methods disagree at p=" << p
              << " (bm " << r.lc_bm << ", gcd " << r.lc_gcd << ")\n";
          return static_cast<int>(kMethodDisagreement);
        }
        reports.push_back(std::move(r));
      }
    }

    if (opt.format == "csv") {
      out << kCsvHeader << '\n';
      for (const auto& r : reports) out << csv_row(r) << '\n';
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump() << '\n';
    }
    print_elapsed(err, start);
    return static_cast<int>(kOk);
  });
}

}  // namespace eqa::cli
