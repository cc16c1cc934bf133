#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

#include "bitops.hpp"
#include "eqa/errors.hpp"
#include "eqa/lincomplex.hpp"

namespace eqa {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(r);
}

// LC of S + E where E flips `positions`; `scratch` is reused between calls.
std::size_t lc_with_flips(const Gf2Poly& modulus,
                          std::span<const std::uint64_t> base,
                          std::span<const std::size_t> positions,
                          std::size_t period,
                          std::vector<std::uint64_t>& scratch) {
  scratch.assign(base.begin(), base.end());
  for (auto u : positions) detail::flip_bit(scratch, u);
  const Gf2Poly g = poly_gcd(modulus, Gf2Poly::from_words(scratch));
  return period - *g.degree();
}

// Minimum LC over all weight-k patterns. Workers take the first position
// from a shared counter and enumerate the remaining k-1 positions
// lexicographically. `floor_hit` stops everyone once LC 0 is seen.
std::size_t min_lc_exactly_k(const BinarySequence& seq, std::size_t k,
                             unsigned threads) {
  const std::size_t period = seq.period();
  const Gf2Poly modulus = Gf2Poly::x_pow_minus_one(period);
  const auto base = seq.words();

  std::atomic<std::size_t> next_first{0};
  std::atomic<bool> floor_hit{false};
  std::vector<std::size_t> best(threads, kInf);

  auto worker = [&](unsigned id) {
    std::vector<std::uint64_t> scratch;
    std::vector<std::size_t> comb(k);
    std::size_t local = kInf;
    for (;;) {
      if (floor_hit.load(std::memory_order_relaxed)) break;
      const std::size_t first = next_first.fetch_add(1);
      if (first + k > period) break;
      comb[0] = first;
      for (std::size_t i = 1; i < k; ++i) comb[i] = first + i;
      for (;;) {
        const std::size_t lc = lc_with_flips(modulus, base, comb, period, scratch);
        if (lc < local) local = lc;
        if (local == 0) {
          floor_hit.store(true, std::memory_order_relaxed);
          break;
        }
        // Advance positions 1..k-1 to the next combination.
        std::size_t i = k;
        while (i > 1 && comb[i - 1] == period - k + (i - 1)) --i;
        if (i == 1) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
      }
      if (local == 0) break;
    }
    best[id] = local;
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  return *std::min_element(best.begin(), best.end());
}

}  // namespace

std::uint64_t bruteforce_pattern_count(std::size_t period, std::size_t k_max) {
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= k_max && k <= period; ++k) {
    total = saturating_add(total, binomial_saturating(period, k));
  }
  return total;
}

KErrorProfile k_error_lc_bruteforce(const BinarySequence& seq,
                                    std::size_t k_max, std::uint64_t budget,
                                    unsigned threads) {
  const std::size_t weight = seq.weight();
  // LC_weight = 0 is reached by clearing every one, so levels above the
  // weight are never enumerated.
  const std::size_t effective = std::min(k_max, weight);
  if (bruteforce_pattern_count(seq.period(), effective) > budget) {
    std::size_t admissible = 0;
    while (bruteforce_pattern_count(seq.period(), admissible + 1) <= budget) {
      ++admissible;
    }
    throw BudgetExceeded("brute-force k-error search for k_max = " +
                             std::to_string(k_max) + " needs " +
                             std::to_string(bruteforce_pattern_count(
                                 seq.period(), effective)) +
                             " patterns, budget is " + std::to_string(budget) +
                             "; largest admissible k_max is " +
                             std::to_string(admissible),
                         admissible);
  }
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  std::vector<std::size_t> lc_by_k;
  lc_by_k.reserve(k_max + 1);
  lc_by_k.push_back(lc_gcd(seq).lc);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t prev = lc_by_k.back();
    if (prev == 0) {
      lc_by_k.push_back(0);
      continue;
    }
    lc_by_k.push_back(std::min(prev, min_lc_exactly_k(seq, k, threads)));
  }
  return KErrorProfile::from_values(lc_by_k, weight, k_max);
}

namespace {

// cost[x][y]: fewest flips inside the residue block {u : u = j (mod p)} that
// satisfy the Phi_3^c condition on the block and leave the U-classes j and
// j+p with weight parities x and y.
using BlockCost = std::array<std::array<std::size_t, 2>, 2>;

BlockCost block_cost(const BinarySequence& seq, std::size_t j, std::size_t p,
                     unsigned c) {
  const std::size_t half = p * p;
  const std::size_t two_p = 2 * p;
  BlockCost cost{};

  if (c == 2) {
    // Every U-class must end all-zero (parity 0) or all-one (parity p = 1).
    std::array<std::size_t, 2> w{};
    for (std::size_t t = 0; t < p; ++t) {
      w[0] += seq[j + t * two_p];
      w[1] += seq[j + p + t * two_p];
    }
    for (unsigned x = 0; x < 2; ++x) {
      for (unsigned y = 0; y < 2; ++y) {
        cost[x][y] = (x ? p - w[0] : w[0]) + (y ? p - w[1] : w[1]);
      }
    }
    return cost;
  }

  // Positions j + lp and j + lp + p^2 differ by p^2 = p (mod 2p), so each
  // pair has one member in class j and one in class j+p. For c = 1 the pair
  // sums (the V_j entries) must all equal a common tau.
  for (auto& row : cost) row.fill(kInf);
  const unsigned taus = c == 1 ? 2 : 1;
  for (unsigned tau = 0; tau < taus; ++tau) {
    BlockCost dp;
    for (auto& row : dp) row.fill(kInf);
    dp[0][0] = 0;
    for (std::size_t l = 0; l < p; ++l) {
      const std::size_t u1 = j + l * p;
      const std::size_t u2 = u1 + half;
      const bool u1_in_j = u1 % two_p == j;
      const unsigned alpha = seq[u1_in_j ? u1 : u2];  // class j member
      const unsigned beta = seq[u1_in_j ? u2 : u1];   // class j+p member
      BlockCost next;
      for (auto& row : next) row.fill(kInf);
      for (unsigned x = 0; x < 2; ++x) {
        for (unsigned y = 0; y < 2; ++y) {
          if (dp[x][y] >= kInf) continue;
          for (unsigned a2 = 0; a2 < 2; ++a2) {
            for (unsigned b2 = 0; b2 < 2; ++b2) {
              if (c == 1 && (a2 ^ b2) != tau) continue;
              const std::size_t step = (a2 != alpha) + (b2 != beta);
              auto& slot = next[x ^ a2][y ^ b2];
              slot = std::min(slot, dp[x][y] + step);
            }
          }
        }
      }
      dp = next;
    }
    for (unsigned x = 0; x < 2; ++x) {
      for (unsigned y = 0; y < 2; ++y) cost[x][y] = std::min(cost[x][y], dp[x][y]);
    }
  }
  return cost;
}

}  // namespace

std::size_t min_flips_for_divisor_unchecked(const BinarySequence& seq,
                                            const DivisorExponents& d, Int p) {
  const std::size_t pp = static_cast<std::size_t>(p);
  if (seq.period() != 2 * pp * pp) {
    throw PeriodMismatch("min_flips_for_divisor: period " +
                         std::to_string(seq.period()) + " != 2p^2");
  }

  // The Phi_1^a Phi_2^b part depends only on f = S mod (X^{2p} - 1), whose
  // coefficient f_i is the parity of U_i. Writing e_j / o_j for the parity of
  // the even / odd class of block j:
  //   Phi_1   | f  <=>  sum(e) + sum(o) = 0
  //   Phi_1^2 | f  <=>  sum(e) = sum(o) = 0
  //   Phi_2   | f  <=>  e_j + o_j constant over j
  //   Phi_2^2 | f  <=>  e_j and o_j each constant over j
  // The DP state carries block 0's (e, o) and the running parities.
  struct State {
    std::size_t cost = kInf;
  };
  std::array<State, 16> dp{};  // index: e0 | o0 << 1 | pe << 2 | po << 3
  auto idx = [](unsigned e0, unsigned o0, unsigned pe, unsigned po) {
    return e0 | (o0 << 1) | (pe << 2) | (po << 3);
  };

  for (std::size_t j = 0; j < pp; ++j) {
    const BlockCost bc = block_cost(seq, j, pp, d.c);
    const bool j_even = j % 2 == 0;
    std::array<State, 16> next{};
    for (unsigned x = 0; x < 2; ++x) {
      for (unsigned y = 0; y < 2; ++y) {
        if (bc[x][y] >= kInf) continue;
        const unsigned e = j_even ? x : y;
        const unsigned o = j_even ? y : x;
        if (j == 0) {
          auto& slot = next[idx(e, o, e, o)];
          slot.cost = std::min(slot.cost, bc[x][y]);
          continue;
        }
        for (unsigned s = 0; s < 16; ++s) {
          if (dp[s].cost >= kInf) continue;
          const unsigned e0 = s & 1U, o0 = (s >> 1) & 1U;
          const unsigned pe = (s >> 2) & 1U, po = (s >> 3) & 1U;
          if (d.b == 1 && (e ^ o) != (e0 ^ o0)) continue;
          if (d.b == 2 && (e != e0 || o != o0)) continue;
          auto& slot = next[idx(e0, o0, pe ^ e, po ^ o)];
          slot.cost = std::min(slot.cost, dp[s].cost + bc[x][y]);
        }
      }
    }
    dp = next;
  }

  std::size_t best = kInf;
  for (unsigned s = 0; s < 16; ++s) {
    const unsigned pe = (s >> 2) & 1U, po = (s >> 3) & 1U;
    if (d.a == 1 && (pe ^ po) != 0) continue;
    if (d.a == 2 && (pe != 0 || po != 0)) continue;
    best = std::min(best, dp[s].cost);
  }
  return best;
}

namespace {

void require_primitive_root(Int p) {
  if (!classify_prime(p).two_primitive_root_mod_p2) {
    throw PreconditionFailed("2 is not a primitive root modulo " +
                             std::to_string(p) + "^2; Phi_2 and Phi_3 are "
                             "reducible and the divisor lattice is incomplete");
  }
}

}  // namespace

std::size_t min_flips_for_divisor(const BinarySequence& seq,
                                  const DivisorExponents& d, Int p) {
  require_primitive_root(p);
  return min_flips_for_divisor_unchecked(seq, d, p);
}

KErrorProfile k_error_lc_structured(const BinarySequence& seq, Int p) {
  require_primitive_root(p);
  const std::size_t period = seq.period();
  if (period != 2 * p * p) {
    throw PeriodMismatch("k_error_lc_structured: period " +
                         std::to_string(period) + " != 2p^2");
  }

  struct Candidate {
    std::size_t flips;
    std::size_t degree;
  };
  std::vector<Candidate> cands;
  for (const auto& d : divisor_lattice()) {
    cands.push_back({min_flips_for_divisor_unchecked(seq, d, p), d.degree(p)});
  }

  const std::size_t weight = seq.weight();
  std::vector<std::size_t> lc_by_k(weight + 1);
  for (std::size_t k = 0; k <= weight; ++k) {
    std::size_t best = 0;
    for (const auto& c : cands) {
      if (c.flips <= k) best = std::max(best, c.degree);
    }
    lc_by_k[k] = period - best;
  }
  return KErrorProfile::from_values(lc_by_k, weight, std::nullopt);
}

KErrorProfile closed_form_profile(const PrimeParams& params) {
  if (params.p <= 3 || !params.two_primitive_root_mod_p2) {
    throw PreconditionFailed("closed-form profile needs p > 3 with 2 a "
                             "primitive root modulo p^2 (p = " +
                             std::to_string(params.p) + ")");
  }
  const std::size_t p = static_cast<std::size_t>(params.p);
  const std::size_t w = (p - 1) * (p - 1) / 2;
  KErrorProfile prof;
  prof.weight = w;
  if (params.p_mod_4 == 1) {
    prof.breakpoints = {{0, 2 * (p * p - p)}, {w, 0}};
  } else {
    prof.breakpoints = {{0, 2 * (p * p - 1)},
                        {1, 2 * (p * p - p + 1)},
                        {p - 1, 2 * (p * p - p)},
                        {w, 0}};
  }
  return prof;
}

}  // namespace eqa
