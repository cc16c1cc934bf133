#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqa/numtheory.hpp"

namespace eqa {

// One period of a binary sequence, bit-packed (bit u of the period lives in
// word u / 64, position u % 64). Immutable once built.
class BinarySequence {
 public:
  BinarySequence() = default;
  // All-zero sequence of the given period.
  explicit BinarySequence(std::size_t period);
  // Throws InvalidArgument if any entry is not 0 or 1.
  explicit BinarySequence(std::span<const std::uint8_t> bits);
  static BinarySequence from_positions(std::size_t period,
                                       std::span<const std::size_t> ones);

  std::size_t period() const noexcept { return period_; }
  bool bit(std::size_t u) const { return (words_[u >> 6] >> (u & 63)) & 1U; }
  bool operator[](std::size_t u) const { return bit(u); }

  std::size_t weight() const noexcept;
  std::vector<std::size_t> one_positions() const;
  std::vector<std::uint8_t> to_bits() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  // Copy with the listed positions complemented.
  BinarySequence with_flips(std::span<const std::size_t> positions) const;

  friend bool operator==(const BinarySequence&,
                         const BinarySequence&) = default;

 private:
  std::size_t period_ = 0;
  std::vector<std::uint64_t> words_;
};

// e_u = 1 iff q_{2p}(u) >= p, for u in [0, 2p^2).
BinarySequence generate(const PrimeParams& params);

// The same rule evaluated at an arbitrary u (no reduction mod 2p^2).
bool sequence_bit(Int u, Int p);

enum class ViewKind { A, B, C, D, E, U, V };

char view_kind_name(ViewKind kind);

struct DecimationView {
  ViewKind kind;
  std::size_t index;
  std::vector<std::uint8_t> values;
};

// Strided samples of a period-2p^2 sequence:
//   A_i, U_i: s_i, s_{i+2p}, ..., s_{i+2(p-1)p}            (0 <= i < 2p)
//   C_j:      s_j, s_{j+p}, ..., s_{j+(p-1)p}               (0 <= j < p)
//   D_j:      C_j shifted by p^2
//   B_j:      C_j followed by D_j
//   E_j, V_j: C_j + D_j componentwise over GF(2)
// Throws PeriodMismatch or IndexOutOfRange.
DecimationView decimate(const BinarySequence& seq, ViewKind kind,
                        std::size_t index, Int p);

std::size_t view_weight(const DecimationView& view);

// Parses '0'/'1' characters; whitespace and commas are skipped. Throws
// BadCharacter (offset into `text`) or LengthMismatch.
BinarySequence load_sequence(std::string_view text, std::size_t period);

// Bits in groups of `group` characters joined by ','. group = 0 means no
// grouping.
std::string format_bits(const BinarySequence& seq, std::size_t group);

}  // namespace eqa
