#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace eqa::cli;

  CLI::App app{"Euler-quotient sequences modulo 2p: generation, linear "
               "complexity and k-error profiles"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Emit one period of the sequence");
  generate->add_option("--p", gen.p, "Odd prime p > 3")->required();
  generate->add_option("--format", gen.format, "bits | json | positions")
      ->check(CLI::IsMember({"bits", "json", "positions"}));

  LcOptions lc;
  auto* lc_cmd = app.add_subcommand("lc", "Linear complexity of a generated or loaded sequence");
  lc_cmd->add_option("--p", lc.p, "Odd prime p > 3");
  lc_cmd->add_option("--file", lc.file, "Text file of 0/1 (whitespace and commas ignored)");
  lc_cmd->add_option("--period", lc.period, "Period of the sequence in --file");
  lc_cmd->add_option("--method", lc.method, "bm | gcd | both")
      ->check(CLI::IsMember({"bm", "gcd", "both"}));
  lc_cmd->add_option("--format", lc.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  KlcOptions klc;
  auto* klc_cmd = app.add_subcommand("klc", "k-error linear complexity profile");
  klc_cmd->add_option("--p", klc.p, "Odd prime p > 3")->required();
  klc_cmd->add_option("--engine", klc.engine, "structured | bruteforce")
      ->check(CLI::IsMember({"structured", "bruteforce"}));
  klc_cmd->add_option("--max-k", klc.max_k, "Largest k for the brute-force engine");
  klc_cmd->add_option("--budget", klc.budget,
                      "Brute-force pattern budget (default $EQA_BUDGET or 1e8)");
  klc_cmd->add_option("--format", klc.format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Check every structural property at p");
  verify->add_option("--p", ver.p, "Odd prime p > 3")->required();

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Tabulate all primes in a range");
  scan_cmd->add_option("--p-min", scan.p_min, "Smallest prime considered");
  scan_cmd->add_option("--p-max", scan.p_max, "Largest prime considered");
  scan_cmd->add_option("--format", scan.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*generate) return run_generate(gen, std::cout, std::cerr);
  if (*lc_cmd) return run_lc(lc, std::cout, std::cerr);
  if (*klc_cmd) return run_klc(klc, std::cout, std::cerr);
  if (*verify) return run_verify(ver, std::cout, std::cerr);
  if (*scan_cmd) return run_scan(scan, std::cout, std::cerr);
  return kInputError;
}
