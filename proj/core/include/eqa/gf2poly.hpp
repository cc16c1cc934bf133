#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqa/numtheory.hpp"
#include "eqa/sequence.hpp"

namespace eqa {

// Dense polynomial over GF(2); bit i of the packed word array is the
// coefficient of X^i. Storage is kept trimmed so equality is support equality.
class Gf2Poly {
 public:
  Gf2Poly() = default;  // zero polynomial

  static Gf2Poly zero() { return {}; }
  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly monomial(std::size_t exponent);
  static Gf2Poly from_exponents(std::initializer_list<std::size_t> exps);
  static Gf2Poly from_exponents(std::span<const std::size_t> exps);
  static Gf2Poly from_words(std::vector<std::uint64_t> words);
  // s_0 + s_1 X + ... + s_{T-1} X^{T-1}
  static Gf2Poly from_sequence(const BinarySequence& seq);
  // X^n + 1 (= X^n - 1 over GF(2)).
  static Gf2Poly x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return words_.empty(); }
  // nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  bool coeff(std::size_t i) const noexcept;
  std::size_t weight() const noexcept;
  std::vector<std::size_t> exponents() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  // "1 + X + X^5"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

Gf2Poly poly_add(const Gf2Poly& f, const Gf2Poly& g);
Gf2Poly poly_mul(const Gf2Poly& f, const Gf2Poly& g);

struct Gf2DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

// Throws DivideByZero when g = 0.
Gf2DivMod poly_divmod(const Gf2Poly& f, const Gf2Poly& g);
Gf2Poly poly_rem(const Gf2Poly& f, const Gf2Poly& g);
bool poly_divides(const Gf2Poly& d, const Gf2Poly& f);

// Euclid. Throws BothZero when f = g = 0.
Gf2Poly poly_gcd(const Gf2Poly& f, const Gf2Poly& g);

Gf2Poly poly_pow(const Gf2Poly& f, unsigned e);
Gf2Poly poly_mulmod(const Gf2Poly& f, const Gf2Poly& g, const Gf2Poly& m);

// Rabin's test: f of degree n is irreducible iff X^(2^n) = X mod f and
// gcd(X^(2^(n/q)) - X, f) = 1 for every prime q | n.
bool is_irreducible(const Gf2Poly& f);

inline Gf2Poly operator+(const Gf2Poly& f, const Gf2Poly& g) {
  return poly_add(f, g);
}
inline Gf2Poly operator*(const Gf2Poly& f, const Gf2Poly& g) {
  return poly_mul(f, g);
}
inline Gf2Poly operator%(const Gf2Poly& f, const Gf2Poly& g) {
  return poly_rem(f, g);
}

// Phi_1 = X + 1, Phi_2 = 1 + X + ... + X^{p-1},
// Phi_3 = 1 + X^p + ... + X^{(p-1)p}.
enum class PhiFactor { One = 1, Two = 2, Three = 3 };

Gf2Poly phi_factor(PhiFactor which, Int p);

// Selects Phi_1^a Phi_2^b Phi_3^c, a divisor of X^{2p^2} - 1.
struct DivisorExponents {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;

  // Throws InvalidArgument when an exponent exceeds 2.
  DivisorExponents(unsigned a_, unsigned b_, unsigned c_);
  DivisorExponents() = default;

  std::size_t degree(Int p) const;
  Gf2Poly polynomial(Int p) const;
  std::string to_string() const;

  friend bool operator==(const DivisorExponents&,
                         const DivisorExponents&) = default;
};

// All 27 exponent triples, lexicographic in (a, b, c).
std::array<DivisorExponents, 27> divisor_lattice();

// Structural tests on the decimations: every U_i has weight 0 or p
// (Phi_3^2 | S), every V_j has weight 0 or p (Phi_3 | S). Throw
// PeriodMismatch when the period is not 2p^2.
bool divides_phi3_sq(const BinarySequence& seq, Int p);
bool divides_phi3(const BinarySequence& seq, Int p);

}  // namespace eqa
