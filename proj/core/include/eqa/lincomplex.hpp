#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqa/gf2poly.hpp"
#include "eqa/numtheory.hpp"
#include "eqa/sequence.hpp"

namespace eqa {

enum class LcMethod { BerlekampMassey, GcdFormula };

std::string lc_method_name(LcMethod method);

struct LinearComplexityResult {
  std::size_t lc = 0;
  LcMethod method = LcMethod::GcdFormula;
  std::optional<std::size_t> minimal_poly_degree;  // Berlekamp-Massey only
  std::optional<std::size_t> gcd_degree;           // gcd formula only
};

struct BerlekampMasseyState {
  std::size_t length = 0;  // L
  Gf2Poly connection;      // C(X) = 1 + c_1 X + ... + c_L X^L
};

// Berlekamp-Massey over GF(2) on an explicit finite prefix.
BerlekampMasseyState berlekamp_massey_prefix(std::span<const std::uint8_t> terms);

// Runs BM on two periods of the periodic extension.
LinearComplexityResult berlekamp_massey(const BinarySequence& seq);

// T - deg gcd(X^T - 1, S(X)); the all-zero sequence has LC 0.
LinearComplexityResult lc_gcd(const BinarySequence& seq);

struct Breakpoint {
  std::size_t k = 0;
  std::size_t lc = 0;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Step function k -> LC_k given by its breakpoints. A profile computed only
// for k <= k_limit carries that limit; a complete profile has none and ends
// at (weight, 0).
struct KErrorProfile {
  std::vector<Breakpoint> breakpoints;
  std::size_t weight = 0;
  std::optional<std::size_t> k_limit;

  // Compresses LC_0, LC_1, ... into breakpoints.
  static KErrorProfile from_values(std::span<const std::size_t> lc_by_k,
                                   std::size_t weight,
                                   std::optional<std::size_t> k_limit);

  std::size_t lc_at(std::size_t k) const;
  bool complete() const noexcept { return !k_limit.has_value(); }
  // Checks ordering, strict monotonicity and (for complete profiles)
  // termination at (weight, 0).
  bool well_formed() const;
  std::string to_string() const;  // "(0,240) (1,222) ..."

  friend bool operator==(const KErrorProfile&, const KErrorProfile&) = default;
};

struct ErrorPattern {
  std::vector<std::size_t> positions;  // sorted, distinct
};

BinarySequence apply_errors(const BinarySequence& seq, const ErrorPattern& e);

inline constexpr std::uint64_t kDefaultBruteForceBudget = 100'000'000;

// Number of patterns the brute-force engine evaluates for k_max:
// sum_{k=1}^{k_max} C(period, k). Saturates at UINT64_MAX.
std::uint64_t bruteforce_pattern_count(std::size_t period, std::size_t k_max);

// Exhaustive k-error profile for k <= k_max. Throws BudgetExceeded when the
// pattern count exceeds `budget`. Work is split across `threads` workers
// (0 = hardware concurrency); the result is independent of scheduling.
KErrorProfile k_error_lc_bruteforce(const BinarySequence& seq,
                                    std::size_t k_max,
                                    std::uint64_t budget = kDefaultBruteForceBudget,
                                    unsigned threads = 0);

// Exact minimum number of flips within one period after which
// Phi_1^a Phi_2^b Phi_3^c divides the generating polynomial. Throws
// PreconditionFailed unless 2 is a primitive root mod p^2.
std::size_t min_flips_for_divisor(const BinarySequence& seq,
                                  const DivisorExponents& d, Int p);

// Same search without the primitive-root check. Exact for every odd p; only
// the translation into LC_k needs Phi_2 and Phi_3 irreducible.
std::size_t min_flips_for_divisor_unchecked(const BinarySequence& seq,
                                            const DivisorExponents& d, Int p);

// LC_k = 2p^2 - max{deg d : min_flips_for_divisor(seq, d) <= k}.
KErrorProfile k_error_lc_structured(const BinarySequence& seq, Int p);

// Closed-form profile of the Euler-quotient sequence for p = 1 and 3 mod 4.
KErrorProfile closed_form_profile(const PrimeParams& params);

}  // namespace eqa
