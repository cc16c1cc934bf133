#pragma once

#include <cstdint>
#include <vector>

namespace eqa {

// Integers up to 2^31 are supported everywhere; products are formed in
// 128-bit intermediates so m^2 never overflows.
using Int = std::uint64_t;

struct PrimeFactor {
  Int prime;
  unsigned exponent;
};

Int gcd(Int a, Int b);
Int mul_mod(Int a, Int b, Int m);
Int pow_mod(Int base, Int exp, Int m);

// Inverse of a modulo m. Throws InvalidArgument when gcd(a, m) != 1.
Int inverse_mod(Int a, Int m);

// Deterministic trial division; fine for n < 2^40.
bool is_prime(Int n);
std::vector<PrimeFactor> factorize(Int n);

// Totient by trial-division factorization. Rejects m = 0.
Int euler_phi(Int m);

// q_m(u) = ((u^phi(m) - 1) / m) mod m for gcd(u, m) = 1, and 0 otherwise.
// The power is taken modulo m^2 so the division by m is exact.
Int euler_quotient(Int u, Int m);

// Multiplicative order of g modulo m. Throws InvalidArgument if gcd(g, m) != 1.
Int order_mod(Int g, Int m);

struct PrimeParams {
  Int p = 0;
  Int period = 0;  // 2p^2
  bool two_primitive_root_mod_p2 = false;
  bool non_wieferich = false;
  unsigned p_mod_4 = 0;

  Int p_squared() const { return p * p; }
};

// Throws NotPrime or PrimeTooSmall (p = 2, 3).
PrimeParams classify_prime(Int p);

// q_{2p}(u + 2tp) == q_{2p}(u) + t(p - 1)u^{-1} (mod 2p).
bool quotient_shift_identity(Int u, Int t, Int p);

// q_{2p}(uv) == q_{2p}(u) + q_{2p}(v) (mod 2p).
bool quotient_multiplicative_identity(Int u, Int v, Int p);

// Primes in [lo, hi], ascending.
std::vector<Int> primes_in_range(Int lo, Int hi);

}  // namespace eqa
