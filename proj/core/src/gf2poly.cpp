#include "eqa/gf2poly.hpp"

#include <algorithm>
#include <utility>

#include "bitops.hpp"
#include "eqa/errors.hpp"

namespace eqa {

using detail::kWordBits;

void Gf2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::monomial(std::size_t exponent) {
  Gf2Poly f;
  f.words_.assign(detail::words_for(exponent + 1), 0);
  detail::flip_bit(f.words_, exponent);
  return f;
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<std::size_t> exps) {
  return from_exponents(std::span<const std::size_t>(exps.begin(), exps.size()));
}

Gf2Poly Gf2Poly::from_exponents(std::span<const std::size_t> exps) {
  Gf2Poly f;
  if (exps.empty()) return f;
  const std::size_t top = *std::max_element(exps.begin(), exps.end());
  f.words_.assign(detail::words_for(top + 1), 0);
  // Repeated exponents cancel, as in a sum over GF(2).
  for (auto e : exps) detail::flip_bit(f.words_, e);
  f.trim();
  return f;
}

Gf2Poly Gf2Poly::from_words(std::vector<std::uint64_t> words) {
  Gf2Poly f;
  f.words_ = std::move(words);
  f.trim();
  return f;
}

Gf2Poly Gf2Poly::from_sequence(const BinarySequence& seq) {
  auto w = seq.words();
  return from_words(std::vector<std::uint64_t>(w.begin(), w.end()));
}

Gf2Poly Gf2Poly::x_pow_minus_one(std::size_t n) {
  if (n == 0) return zero();
  return from_exponents({0, n});
}

std::optional<std::size_t> Gf2Poly::degree() const noexcept {
  if (words_.empty()) return std::nullopt;
  return static_cast<std::size_t>(detail::top_bit(words_, words_.size()));
}

bool Gf2Poly::coeff(std::size_t i) const noexcept {
  if (i / kWordBits >= words_.size()) return false;
  return detail::test_bit(words_, i);
}

std::size_t Gf2Poly::weight() const noexcept {
  return detail::popcount(words_);
}

std::vector<std::size_t> Gf2Poly::exponents() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t x = words_[w];
    while (x != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

std::string Gf2Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto e : exponents()) {
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += "1";
    } else if (e == 1) {
      out += "X";
    } else {
      out += "X^" + std::to_string(e);
    }
  }
  return out;
}

Gf2Poly poly_add(const Gf2Poly& f, const Gf2Poly& g) {
  const auto& big = f.words().size() >= g.words().size() ? f : g;
  const auto& small = &big == &f ? g : f;
  std::vector<std::uint64_t> w(big.words().begin(), big.words().end());
  for (std::size_t i = 0; i < small.words().size(); ++i) w[i] ^= small.words()[i];
  return Gf2Poly::from_words(std::move(w));
}

Gf2Poly poly_mul(const Gf2Poly& f, const Gf2Poly& g) {
  if (f.is_zero() || g.is_zero()) return Gf2Poly::zero();
  // Shift-XOR the denser-worded operand once per set bit of the other.
  const bool f_sparse = f.weight() <= g.weight();
  const Gf2Poly& sparse = f_sparse ? f : g;
  const Gf2Poly& dense = f_sparse ? g : f;
  std::vector<std::uint64_t> out(
      detail::words_for(*f.degree() + *g.degree() + 1), 0);
  for (auto e : sparse.exponents()) detail::xor_shifted(out, dense.words(), e);
  return Gf2Poly::from_words(std::move(out));
}

Gf2DivMod poly_divmod(const Gf2Poly& f, const Gf2Poly& g) {
  if (g.is_zero()) throw DivideByZero("polynomial division by zero");
  const std::size_t dg = *g.degree();
  std::vector<std::uint64_t> r(f.words().begin(), f.words().end());
  std::ptrdiff_t dr = detail::top_bit(r, r.size());
  if (dr < static_cast<std::ptrdiff_t>(dg)) {
    return {Gf2Poly::zero(), f};
  }
  std::vector<std::uint64_t> q(detail::words_for(static_cast<std::size_t>(dr) - dg + 1), 0);
  while (dr >= static_cast<std::ptrdiff_t>(dg)) {
    const std::size_t shift = static_cast<std::size_t>(dr) - dg;
    detail::xor_shifted(r, g.words(), shift);
    detail::flip_bit(q, shift);
    dr = detail::top_bit(r, static_cast<std::size_t>(dr) / kWordBits + 1);
  }
  return {Gf2Poly::from_words(std::move(q)), Gf2Poly::from_words(std::move(r))};
}

Gf2Poly poly_rem(const Gf2Poly& f, const Gf2Poly& g) {
  if (g.is_zero()) throw DivideByZero("polynomial remainder by zero");
  const std::size_t dg = *g.degree();
  std::vector<std::uint64_t> r(f.words().begin(), f.words().end());
  std::ptrdiff_t dr = detail::top_bit(r, r.size());
  while (dr >= static_cast<std::ptrdiff_t>(dg)) {
    detail::xor_shifted(r, g.words(), static_cast<std::size_t>(dr) - dg);
    dr = detail::top_bit(r, static_cast<std::size_t>(dr) / kWordBits + 1);
  }
  return Gf2Poly::from_words(std::move(r));
}

bool poly_divides(const Gf2Poly& d, const Gf2Poly& f) {
  return poly_rem(f, d).is_zero();
}

Gf2Poly poly_gcd(const Gf2Poly& f, const Gf2Poly& g) {
  if (f.is_zero() && g.is_zero()) throw BothZero("gcd(0, 0) is undefined");
  Gf2Poly a = f;
  Gf2Poly b = g;
  while (!b.is_zero()) {
    Gf2Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf2Poly poly_pow(const Gf2Poly& f, unsigned e) {
  Gf2Poly result = Gf2Poly::one();
  Gf2Poly base = f;
  while (e != 0) {
    if (e & 1U) result = poly_mul(result, base);
    e >>= 1;
    if (e != 0) base = poly_mul(base, base);
  }
  return result;
}

Gf2Poly poly_mulmod(const Gf2Poly& f, const Gf2Poly& g, const Gf2Poly& m) {
  return poly_rem(poly_mul(f, g), m);
}

bool is_irreducible(const Gf2Poly& f) {
  if (f.is_zero()) return false;
  const std::size_t n = *f.degree();
  if (n == 0) return false;
  if (n == 1) return true;

  const Gf2Poly x = poly_rem(Gf2Poly::monomial(1), f);
  std::vector<std::size_t> checkpoints;
  for (const auto& pf : factorize(n)) checkpoints.push_back(n / pf.prime);

  Gf2Poly h = x;  // X^(2^k) mod f
  for (std::size_t k = 1; k <= n; ++k) {
    h = poly_mulmod(h, h, f);
    if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
      const Gf2Poly diff = poly_add(h, x);
      if (diff.is_zero()) return false;
      if (*poly_gcd(diff, f).degree() != 0) return false;
    }
  }
  return h == x;
}

Gf2Poly phi_factor(PhiFactor which, Int p) {
  const std::size_t pp = static_cast<std::size_t>(p);
  std::vector<std::size_t> exps;
  switch (which) {
    case PhiFactor::One:
      exps = {0, 1};
      break;
    case PhiFactor::Two:
      for (std::size_t i = 0; i < pp; ++i) exps.push_back(i);
      break;
    case PhiFactor::Three:
      for (std::size_t i = 0; i < pp; ++i) exps.push_back(i * pp);
      break;
  }
  return Gf2Poly::from_exponents(exps);
}

DivisorExponents::DivisorExponents(unsigned a_, unsigned b_, unsigned c_)
    : a(a_), b(b_), c(c_) {
  if (a > 2 || b > 2 || c > 2) {
    throw InvalidArgument("divisor exponents must lie in {0, 1, 2}");
  }
}

std::size_t DivisorExponents::degree(Int p) const {
  const std::size_t pp = static_cast<std::size_t>(p);
  return a + b * (pp - 1) + c * (pp * pp - pp);
}

Gf2Poly DivisorExponents::polynomial(Int p) const {
  return poly_mul(poly_mul(poly_pow(phi_factor(PhiFactor::One, p), a),
                           poly_pow(phi_factor(PhiFactor::Two, p), b)),
                  poly_pow(phi_factor(PhiFactor::Three, p), c));
}

std::string DivisorExponents::to_string() const {
  return "Phi1^" + std::to_string(a) + " Phi2^" + std::to_string(b) +
         " Phi3^" + std::to_string(c);
}

std::array<DivisorExponents, 27> divisor_lattice() {
  std::array<DivisorExponents, 27> out;
  std::size_t n = 0;
  for (unsigned a = 0; a <= 2; ++a) {
    for (unsigned b = 0; b <= 2; ++b) {
      for (unsigned c = 0; c <= 2; ++c) out[n++] = DivisorExponents(a, b, c);
    }
  }
  return out;
}

namespace {

void require_period(const BinarySequence& seq, Int p, const char* what) {
  if (seq.period() != 2 * p * p) {
    throw PeriodMismatch(std::string(what) + ": period " +
                         std::to_string(seq.period()) + " != 2p^2");
  }
}

bool all_views_full_or_empty(const BinarySequence& seq, ViewKind kind,
                             std::size_t count, Int p) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t w = view_weight(decimate(seq, kind, i, p));
    if (w != 0 && w != p) return false;
  }
  return true;
}

}  // namespace

bool divides_phi3_sq(const BinarySequence& seq, Int p) {
  require_period(seq, p, "divides_phi3_sq");
  return all_views_full_or_empty(seq, ViewKind::U, 2 * p, p);
}

bool divides_phi3(const BinarySequence& seq, Int p) {
  require_period(seq, p, "divides_phi3");
  return all_views_full_or_empty(seq, ViewKind::V, p, p);
}

}  // namespace eqa
