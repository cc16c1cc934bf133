#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "eqa/errors.hpp"
#include "eqa/gf2poly.hpp"

using namespace eqa;

namespace {

using Coeffs = std::vector<std::uint8_t>;

Gf2Poly from_coeffs(const Coeffs& c) {
  std::vector<std::size_t> e;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) e.push_back(i);
  }
  return Gf2Poly::from_exponents(e);
}

// Schoolbook product on one byte per coefficient.
Coeffs naive_mul(const Coeffs& f, const Coeffs& g) {
  if (f.empty() || g.empty()) return {};
  Coeffs out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] ^= f[i] & g[j];
  }
  return out;
}

Coeffs random_coeffs(std::mt19937_64& rng, std::size_t len) {
  Coeffs c(len);
  for (auto& x : c) x = rng() & 1U;
  return c;
}

Gf2Poly poly_from_mask(unsigned mask) {
  return Gf2Poly::from_words({mask});
}

// Irreducible iff no factor of degree 1..n/2.
bool irreducible_by_trial_division(const Gf2Poly& f) {
  const std::size_t n = *f.degree();
  if (n == 0) return false;
  for (unsigned mask = 2; mask < (1U << (n / 2 + 1)); ++mask) {
    const Gf2Poly d = poly_from_mask(mask);
    if (*d.degree() >= 1 && *d.degree() <= n / 2 && poly_divides(d, f)) {
      return false;
    }
  }
  return true;
}

BinarySequence seq_from_poly(const Gf2Poly& f, std::size_t period) {
  BinarySequence s(period);
  return s.with_flips(f.exponents());
}

}  // namespace

TEST(Gf2Poly, ZeroAndDegree) {
  EXPECT_TRUE(Gf2Poly().is_zero());
  EXPECT_FALSE(Gf2Poly().degree().has_value());
  EXPECT_EQ(Gf2Poly::one().degree(), 0u);
  EXPECT_EQ(Gf2Poly::monomial(200).degree(), 200u);
  EXPECT_EQ(Gf2Poly::from_exponents({3, 3}), Gf2Poly::zero());
  EXPECT_EQ(Gf2Poly::from_words({5, 0, 0}), Gf2Poly::from_exponents({0, 2}));
}

TEST(Gf2Poly, ToString) {
  EXPECT_EQ(Gf2Poly().to_string(), "0");
  EXPECT_EQ(phi_factor(PhiFactor::Three, 5).to_string(),
            "1 + X^5 + X^10 + X^15 + X^20");
  EXPECT_EQ(Gf2Poly::from_exponents({1, 0}).to_string(), "1 + X");
}

TEST(PolyAdd, Examples) {
  const auto f = Gf2Poly::from_exponents({0, 7, 64, 130});
  EXPECT_TRUE(poly_add(f, f).is_zero());
  EXPECT_EQ(poly_add(Gf2Poly::from_exponents({0, 1}), Gf2Poly::monomial(1)),
            Gf2Poly::one());
  const auto phi2 = phi_factor(PhiFactor::Two, 5);
  EXPECT_TRUE(poly_add(phi2, phi2).is_zero());
}

TEST(PolyMul, Examples) {
  const auto f = Gf2Poly::from_exponents({0, 3, 99});
  EXPECT_EQ(poly_mul(f, Gf2Poly::one()), f);
  EXPECT_TRUE(poly_mul(f, Gf2Poly::zero()).is_zero());
  const auto x1 = Gf2Poly::from_exponents({0, 1});
  EXPECT_EQ(poly_mul(x1, x1), Gf2Poly::from_exponents({0, 2}));
  EXPECT_EQ(poly_mul(phi_factor(PhiFactor::One, 5), phi_factor(PhiFactor::Two, 5)),
            Gf2Poly::from_exponents({0, 5}));
}

TEST(PolyMul, MatchesSchoolbookOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_coeffs(rng, 1 + rng() % 200);
    const auto b = random_coeffs(rng, 1 + rng() % 200);
    ASSERT_EQ(poly_mul(from_coeffs(a), from_coeffs(b)), from_coeffs(naive_mul(a, b)));
  }
}

TEST(PolyRem, Examples) {
  EXPECT_EQ(poly_rem(Gf2Poly::monomial(2), Gf2Poly::from_exponents({0, 2})),
            Gf2Poly::one());
  EXPECT_TRUE(poly_rem(Gf2Poly::from_exponents({1, 9}), Gf2Poly::one()).is_zero());
  const auto phi3 = phi_factor(PhiFactor::Three, 5);
  EXPECT_TRUE(poly_rem(Gf2Poly::x_pow_minus_one(50), poly_mul(phi3, phi3)).is_zero());
  EXPECT_THROW(poly_rem(Gf2Poly::one(), Gf2Poly::zero()), DivideByZero);
}

TEST(PolyDivMod, ReconstructsDividend) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = from_coeffs(random_coeffs(rng, 1 + rng() % 400));
    auto g = from_coeffs(random_coeffs(rng, 1 + rng() % 150));
    if (g.is_zero()) g = Gf2Poly::one();
    const auto [q, r] = poly_divmod(f, g);
    ASSERT_EQ(poly_add(poly_mul(q, g), r), f);
    if (!r.is_zero()) {
      ASSERT_LT(*r.degree(), *g.degree());
    }
    ASSERT_EQ(poly_rem(f, g), r);
  }
}

TEST(PolyGcd, Examples) {
  const auto f = Gf2Poly::from_exponents({0, 4, 5});
  EXPECT_EQ(poly_gcd(f, Gf2Poly::zero()), f);
  EXPECT_EQ(poly_gcd(Gf2Poly::from_exponents({0, 2}), Gf2Poly::from_exponents({0, 1})),
            Gf2Poly::from_exponents({0, 1}));
  EXPECT_THROW(poly_gcd(Gf2Poly::zero(), Gf2Poly::zero()), BothZero);
}

TEST(PolyGcd, MatchesExhaustiveCommonDivisorSearch) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    // Plant a common factor so nontrivial gcds appear.
    const auto common = poly_from_mask(1 + rng() % 15);
    const auto f = poly_mul(poly_from_mask(1 + rng() % 31), common);
    const auto g = poly_mul(poly_from_mask(1 + rng() % 31), common);
    const auto d = poly_gcd(f, g);
    ASSERT_TRUE(poly_divides(d, f));
    ASSERT_TRUE(poly_divides(d, g));
    std::size_t best = 0;
    for (unsigned mask = 1; mask < 512; ++mask) {
      const auto c = poly_from_mask(mask);
      if (poly_divides(c, f) && poly_divides(c, g)) {
        ASSERT_TRUE(poly_divides(c, d)) << c.to_string();
        best = std::max(best, *c.degree());
      }
    }
    ASSERT_EQ(*d.degree(), best);
  }
}

TEST(PhiFactor, Definitions) {
  EXPECT_EQ(phi_factor(PhiFactor::One, 5), Gf2Poly::from_exponents({0, 1}));
  EXPECT_EQ(phi_factor(PhiFactor::Two, 5), Gf2Poly::from_exponents({0, 1, 2, 3, 4}));
  EXPECT_EQ(phi_factor(PhiFactor::Three, 5),
            Gf2Poly::from_exponents({0, 5, 10, 15, 20}));
}

TEST(PhiFactor, SquaredProductIsXPow2p2MinusOne) {
  for (Int p : {5u, 7u, 11u, 13u}) {
    const auto prod = poly_mul(poly_mul(phi_factor(PhiFactor::One, p),
                                        phi_factor(PhiFactor::Two, p)),
                               phi_factor(PhiFactor::Three, p));
    EXPECT_EQ(prod, Gf2Poly::x_pow_minus_one(p * p)) << p;
    EXPECT_EQ(poly_mul(prod, prod), Gf2Poly::x_pow_minus_one(2 * p * p)) << p;
    EXPECT_EQ(DivisorExponents(2, 2, 2).polynomial(p),
              Gf2Poly::x_pow_minus_one(2 * p * p));
  }
}

TEST(DivisorExponents, DegreeFormulaMatchesPolynomial) {
  for (Int p : {5u, 7u}) {
    for (const auto& d : divisor_lattice()) {
      EXPECT_EQ(d.polynomial(p).degree(), d.degree(p)) << d.to_string();
    }
  }
  EXPECT_THROW(DivisorExponents(3, 0, 0), InvalidArgument);
}

TEST(Irreducibility, RabinMatchesTrialDivisionUpToDegree12) {
  for (unsigned mask = 2; mask < (1U << 13); ++mask) {
    const auto f = poly_from_mask(mask);
    ASSERT_EQ(is_irreducible(f), irreducible_by_trial_division(f)) << f.to_string();
  }
}

TEST(Irreducibility, PhiFactorsUnderPrimitiveRoot) {
  // Exhaustive factor search for p = 5 (degrees 4 and 20).
  EXPECT_TRUE(irreducible_by_trial_division(phi_factor(PhiFactor::Two, 5)));
  EXPECT_TRUE(irreducible_by_trial_division(phi_factor(PhiFactor::Three, 5)));
  for (Int p : {5u, 11u, 13u, 19u}) {
    ASSERT_TRUE(classify_prime(p).two_primitive_root_mod_p2);
    EXPECT_TRUE(is_irreducible(phi_factor(PhiFactor::Two, p))) << p;
    EXPECT_TRUE(is_irreducible(phi_factor(PhiFactor::Three, p))) << p;
  }
  // ord(2 mod 49) = 21: both factors split.
  EXPECT_FALSE(is_irreducible(phi_factor(PhiFactor::Two, 7)));
  EXPECT_FALSE(is_irreducible(phi_factor(PhiFactor::Three, 7)));
}

TEST(StructuralDivisibility, Examples) {
  EXPECT_TRUE(divides_phi3_sq(BinarySequence(50), 5));
  EXPECT_TRUE(divides_phi3(BinarySequence(50), 5));
  EXPECT_FALSE(divides_phi3_sq(generate(classify_prime(5)), 5));
  EXPECT_FALSE(divides_phi3(generate(classify_prime(11)), 11));

  std::vector<std::size_t> full_class;
  for (std::size_t t = 0; t < 5; ++t) full_class.push_back(3 + 10 * t);
  EXPECT_TRUE(divides_phi3_sq(BinarySequence::from_positions(50, full_class), 5));

  const auto phi3 = seq_from_poly(phi_factor(PhiFactor::Three, 5), 50);
  EXPECT_TRUE(divides_phi3(phi3, 5));
  EXPECT_FALSE(divides_phi3_sq(phi3, 5));

  EXPECT_THROW(divides_phi3(BinarySequence(49), 5), PeriodMismatch);
  EXPECT_THROW(divides_phi3_sq(BinarySequence(49), 5), PeriodMismatch);
}

TEST(StructuralDivisibility, AgreesWithRemainderOnRandomAndPlanted) {
  std::mt19937_64 rng(14);
  const Int p = 5;
  const auto phi3 = phi_factor(PhiFactor::Three, p);
  const auto phi3sq = poly_mul(phi3, phi3);
  int planted_true = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    Gf2Poly s;
    switch (trial % 4) {
      case 0:
        s = from_coeffs(random_coeffs(rng, 50));
        break;
      case 1:
        s = poly_mul(phi3, from_coeffs(random_coeffs(rng, 30)));
        break;
      case 2:
        s = poly_mul(phi3sq, from_coeffs(random_coeffs(rng, 10)));
        break;
      default: {
        // Phi_3 multiple plus one stray term.
        s = poly_add(poly_mul(phi3, from_coeffs(random_coeffs(rng, 30))),
                     Gf2Poly::monomial(rng() % 50));
      }
    }
    const auto seq = seq_from_poly(s, 50);
    const bool by_rem3 = poly_divides(phi3, s);
    const bool by_rem33 = poly_divides(phi3sq, s);
    planted_true += by_rem33;
    ASSERT_EQ(divides_phi3(seq, p), by_rem3) << s.to_string();
    ASSERT_EQ(divides_phi3_sq(seq, p), by_rem33) << s.to_string();
  }
  EXPECT_GT(planted_true, 500);
}
