#include "eqa/sequence.hpp"

#include <cctype>
#include <string>

#include "bitops.hpp"
#include "eqa/errors.hpp"

namespace eqa {

BinarySequence::BinarySequence(std::size_t period)
    : period_(period), words_(detail::words_for(period), 0) {}

BinarySequence::BinarySequence(std::span<const std::uint8_t> bits)
    : BinarySequence(bits.size()) {
  for (std::size_t u = 0; u < bits.size(); ++u) {
    if (bits[u] > 1) {
      throw InvalidArgument("BinarySequence: entry " + std::to_string(u) +
                            " is not 0 or 1");
    }
    if (bits[u]) detail::flip_bit(words_, u);
  }
}

BinarySequence BinarySequence::from_positions(
    std::size_t period, std::span<const std::size_t> ones) {
  BinarySequence seq(period);
  for (auto u : ones) {
    if (u >= period) {
      throw IndexOutOfRange("position " + std::to_string(u) +
                            " outside period " + std::to_string(period));
    }
    seq.words_[u >> 6] |= std::uint64_t{1} << (u & 63);
  }
  return seq;
}

std::size_t BinarySequence::weight() const noexcept {
  return detail::popcount(words_);
}

std::vector<std::size_t> BinarySequence::one_positions() const {
  std::vector<std::size_t> out;
  out.reserve(weight());
  for (std::size_t u = 0; u < period_; ++u) {
    if (bit(u)) out.push_back(u);
  }
  return out;
}

std::vector<std::uint8_t> BinarySequence::to_bits() const {
  std::vector<std::uint8_t> out(period_);
  for (std::size_t u = 0; u < period_; ++u) out[u] = bit(u) ? 1 : 0;
  return out;
}

BinarySequence BinarySequence::with_flips(
    std::span<const std::size_t> positions) const {
  BinarySequence out = *this;
  for (auto u : positions) {
    if (u >= period_) {
      throw IndexOutOfRange("flip position " + std::to_string(u) +
                            " outside period " + std::to_string(period_));
    }
    detail::flip_bit(out.words_, u);
  }
  return out;
}

bool sequence_bit(Int u, Int p) {
  // q/(2p) < 1/2  <=>  q < p
  return euler_quotient(u, 2 * p) >= p;
}

BinarySequence generate(const PrimeParams& params) {
  std::vector<std::size_t> ones;
  for (Int u = 0; u < params.period; ++u) {
    if (sequence_bit(u, params.p)) ones.push_back(static_cast<std::size_t>(u));
  }
  return BinarySequence::from_positions(static_cast<std::size_t>(params.period),
                                        ones);
}

char view_kind_name(ViewKind kind) {
  switch (kind) {
    case ViewKind::A: return 'A';
    case ViewKind::B: return 'B';
    case ViewKind::C: return 'C';
    case ViewKind::D: return 'D';
    case ViewKind::E: return 'E';
    case ViewKind::U: return 'U';
    case ViewKind::V: return 'V';
  }
  return '?';
}

DecimationView decimate(const BinarySequence& seq, ViewKind kind,
                        std::size_t index, Int p) {
  const std::size_t pp = static_cast<std::size_t>(p);
  const std::size_t half = pp * pp;
  if (seq.period() != 2 * half) {
    throw PeriodMismatch("decimate: period " + std::to_string(seq.period()) +
                         " != 2p^2 = " + std::to_string(2 * half));
  }
  const bool stride_2p = kind == ViewKind::A || kind == ViewKind::U;
  const std::size_t limit = stride_2p ? 2 * pp : pp;
  if (index >= limit) {
    throw IndexOutOfRange(std::string("decimate: ") + view_kind_name(kind) +
                          " index " + std::to_string(index) + " >= " +
                          std::to_string(limit));
  }

  DecimationView view{kind, index, {}};
  auto& v = view.values;
  switch (kind) {
    case ViewKind::A:
    case ViewKind::U:
      for (std::size_t t = 0; t < pp; ++t) v.push_back(seq[index + 2 * t * pp]);
      break;
    case ViewKind::C:
      for (std::size_t t = 0; t < pp; ++t) v.push_back(seq[index + t * pp]);
      break;
    case ViewKind::D:
      for (std::size_t t = 0; t < pp; ++t) {
        v.push_back(seq[index + t * pp + half]);
      }
      break;
    case ViewKind::B:
      for (std::size_t t = 0; t < pp; ++t) v.push_back(seq[index + t * pp]);
      for (std::size_t t = 0; t < pp; ++t) {
        v.push_back(seq[index + t * pp + half]);
      }
      break;
    case ViewKind::E:
    case ViewKind::V:
      for (std::size_t t = 0; t < pp; ++t) {
        v.push_back(seq[index + t * pp] ^ seq[index + t * pp + half]);
      }
      break;
  }
  return view;
}

std::size_t view_weight(const DecimationView& view) {
  std::size_t n = 0;
  for (auto x : view.values) n += x;
  return n;
}

BinarySequence load_sequence(std::string_view text, std::size_t period) {
  std::vector<std::uint8_t> bits;
  bits.reserve(period);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ',' && !std::isspace(static_cast<unsigned char>(c))) {
      throw BadCharacter(i, c);
    }
  }
  if (bits.size() != period) {
    throw LengthMismatch("expected " + std::to_string(period) +
                         " bits, found " + std::to_string(bits.size()));
  }
  return BinarySequence(std::span<const std::uint8_t>(bits));
}

std::string format_bits(const BinarySequence& seq, std::size_t group) {
  std::string out;
  out.reserve(seq.period() + (group ? seq.period() / group : 0));
  for (std::size_t u = 0; u < seq.period(); ++u) {
    if (group != 0 && u != 0 && u % group == 0) out.push_back(',');
    out.push_back(seq[u] ? '1' : '0');
  }
  return out;
}

}  // namespace eqa
