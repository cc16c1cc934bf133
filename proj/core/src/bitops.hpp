#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eqa::detail {

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

inline bool test_bit(std::span<const std::uint64_t> w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void flip_bit(std::span<std::uint64_t> w, std::size_t i) {
  w[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

// 64 bits of `w` starting at bit `offset`; bits past the end read as zero.
inline std::uint64_t load_bits(std::span<const std::uint64_t> w,
                               std::size_t offset) {
  const std::size_t q = offset / kWordBits;
  const std::size_t r = offset % kWordBits;
  const std::uint64_t lo = q < w.size() ? w[q] : 0;
  if (r == 0) return lo;
  const std::uint64_t hi = q + 1 < w.size() ? w[q + 1] : 0;
  return (lo >> r) | (hi << (kWordBits - r));
}

// dst ^= src << shift. dst must be large enough to hold the shifted bits.
inline void xor_shifted(std::span<std::uint64_t> dst,
                        std::span<const std::uint64_t> src,
                        std::size_t shift) {
  const std::size_t q = shift / kWordBits;
  const std::size_t r = shift % kWordBits;
  if (r == 0) {
    for (std::size_t i = 0; i < src.size() && i + q < dst.size(); ++i) {
      dst[i + q] ^= src[i];
    }
    return;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (i + q < dst.size()) dst[i + q] ^= src[i] << r;
    if (i + q + 1 < dst.size()) dst[i + q + 1] ^= src[i] >> (kWordBits - r);
  }
}

// Index of the highest set bit among the first `nwords` words, or -1.
inline std::ptrdiff_t top_bit(std::span<const std::uint64_t> w,
                              std::size_t nwords) {
  for (std::size_t i = nwords; i-- > 0;) {
    if (w[i] != 0) {
      return static_cast<std::ptrdiff_t>(i * kWordBits + 63 -
                                         std::countl_zero(w[i]));
    }
  }
  return -1;
}

inline std::size_t popcount(std::span<const std::uint64_t> w) {
  std::size_t n = 0;
  for (auto x : w) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

}  // namespace eqa::detail
