#include <bit>
#include <sstream>
#include <utility>

#include "bitops.hpp"
#include "eqa/errors.hpp"
#include "eqa/lincomplex.hpp"

namespace eqa {

std::string lc_method_name(LcMethod method) {
  return method == LcMethod::BerlekampMassey ? "bm" : "gcd";
}

namespace {

// Packed Berlekamp-Massey. The input is stored reversed so the window
// s_n, s_{n-1}, ..., s_{n-L} becomes a forward run starting at N-1-n, and the
// discrepancy is a popcount parity of C AND that run.
BerlekampMasseyState bm_packed(std::span<const std::uint64_t> reversed,
                               std::size_t n_terms) {
  const std::size_t nwords = detail::words_for(n_terms + 1);
  std::vector<std::uint64_t> c(nwords, 0), b(nwords, 0), t;
  c[0] = b[0] = 1;
  std::size_t len = 0;
  std::size_t shift = 1;

  for (std::size_t n = 0; n < n_terms; ++n) {
    const std::size_t off = n_terms - 1 - n;
    std::uint64_t acc = 0;
    const std::size_t used = len / detail::kWordBits + 1;
    for (std::size_t w = 0; w < used; ++w) {
      acc ^= c[w] & detail::load_bits(reversed, off + w * detail::kWordBits);
    }
    if ((std::popcount(acc) & 1) == 0) {
      ++shift;
      continue;
    }
    if (2 * len <= n) {
      t = c;
      detail::xor_shifted(c, b, shift);
      len = n + 1 - len;
      b = std::move(t);
      shift = 1;
    } else {
      detail::xor_shifted(c, b, shift);
      ++shift;
    }
  }
  return {len, Gf2Poly::from_words(std::move(c))};
}

}  // namespace

BerlekampMasseyState berlekamp_massey_prefix(std::span<const std::uint8_t> terms) {
  const std::size_t n = terms.size();
  std::vector<std::uint64_t> reversed(detail::words_for(n) + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (terms[i] & 1U) detail::flip_bit(reversed, n - 1 - i);
  }
  return bm_packed(reversed, n);
}

LinearComplexityResult berlekamp_massey(const BinarySequence& seq) {
  const std::size_t period = seq.period();
  const std::size_t n = 2 * period;
  std::vector<std::uint64_t> reversed(detail::words_for(n) + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (seq[i % period]) detail::flip_bit(reversed, n - 1 - i);
  }
  const auto state = bm_packed(reversed, n);
  LinearComplexityResult r;
  r.lc = state.length;
  r.method = LcMethod::BerlekampMassey;
  r.minimal_poly_degree = state.length;
  return r;
}

LinearComplexityResult lc_gcd(const BinarySequence& seq) {
  LinearComplexityResult r;
  r.method = LcMethod::GcdFormula;
  const std::size_t period = seq.period();
  if (period == 0) {
    r.gcd_degree = 0;
    return r;
  }
  // For S = 0 this is gcd(X^T - 1, 0) = X^T - 1, giving LC 0.
  const Gf2Poly g = poly_gcd(Gf2Poly::x_pow_minus_one(period),
                             Gf2Poly::from_sequence(seq));
  r.gcd_degree = *g.degree();
  r.lc = period - *r.gcd_degree;
  return r;
}

KErrorProfile KErrorProfile::from_values(std::span<const std::size_t> lc_by_k,
                                         std::size_t weight,
                                         std::optional<std::size_t> k_limit) {
  KErrorProfile prof;
  prof.weight = weight;
  prof.k_limit = k_limit;
  for (std::size_t k = 0; k < lc_by_k.size(); ++k) {
    if (prof.breakpoints.empty() || prof.breakpoints.back().lc != lc_by_k[k]) {
      prof.breakpoints.push_back({k, lc_by_k[k]});
    }
  }
  return prof;
}

std::size_t KErrorProfile::lc_at(std::size_t k) const {
  if (breakpoints.empty()) throw InvalidArgument("empty k-error profile");
  if (k_limit && k > *k_limit) {
    throw IndexOutOfRange("k = " + std::to_string(k) +
                          " beyond computed limit " + std::to_string(*k_limit));
  }
  std::size_t lc = breakpoints.front().lc;
  for (const auto& bp : breakpoints) {
    if (bp.k > k) break;
    lc = bp.lc;
  }
  return lc;
}

bool KErrorProfile::well_formed() const {
  if (breakpoints.empty() || breakpoints.front().k != 0) return false;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i].k <= breakpoints[i - 1].k) return false;
    if (breakpoints[i].lc >= breakpoints[i - 1].lc) return false;
  }
  if (complete()) {
    const auto& last = breakpoints.back();
    if (last.lc != 0 || last.k != weight) return false;
  } else if (breakpoints.back().k > *k_limit) {
    return false;
  }
  return true;
}

std::string KErrorProfile::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (i) os << ' ';
    os << '(' << breakpoints[i].k << ',' << breakpoints[i].lc << ')';
  }
  return os.str();
}

BinarySequence apply_errors(const BinarySequence& seq, const ErrorPattern& e) {
  return seq.with_flips(e.positions);
}

}  // namespace eqa
