#include "eqa/numtheory.hpp"

#include <string>

#include "eqa/errors.hpp"

namespace eqa {

Int gcd(Int a, Int b) {
  while (b != 0) {
    const Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int mul_mod(Int a, Int b, Int m) {
  return static_cast<Int>((static_cast<unsigned __int128>(a) * b) % m);
}

Int pow_mod(Int base, Int exp, Int m) {
  if (m == 1) return 0;
  Int result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

Int inverse_mod(Int a, Int m) {
  // Extended Euclid on signed 128-bit values.
  __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1) {
    throw InvalidArgument("inverse_mod: " + std::to_string(a) +
                          " is not invertible modulo " + std::to_string(m));
  }
  if (s0 < 0) s0 += static_cast<__int128>(m);
  return static_cast<Int>(s0);
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimeFactor> factorize(Int n) {
  std::vector<PrimeFactor> out;
  for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

Int euler_phi(Int m) {
  if (m == 0) throw InvalidArgument("euler_phi: m must be positive");
  Int phi = m;
  for (const auto& f : factorize(m)) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

Int euler_quotient(Int u, Int m) {
  if (m < 2) throw InvalidArgument("euler_quotient: modulus must be >= 2");
  if (gcd(u, m) != 1) return 0;
  const Int m2 = m * m;
  const Int r = pow_mod(u, euler_phi(m), m2);
  // r == 1 (mod m), and (r - 1) / m < m already.
  return (r - 1) / m;
}

Int order_mod(Int g, Int m) {
  if (m < 2) throw InvalidArgument("order_mod: modulus must be >= 2");
  if (gcd(g, m) != 1) {
    throw InvalidArgument("order_mod: gcd(" + std::to_string(g) + ", " +
                          std::to_string(m) + ") != 1");
  }
  Int t = euler_phi(m);
  for (const auto& f : factorize(t)) {
    while (t % f.prime == 0 && pow_mod(g, t / f.prime, m) == 1) t /= f.prime;
  }
  return t;
}

PrimeParams classify_prime(Int p) {
  if (!is_prime(p)) {
    throw NotPrime(std::to_string(p) + " is not an odd prime > 3");
  }
  if (p <= 3) {
    throw PrimeTooSmall(std::to_string(p) + " is not an odd prime > 3");
  }
  PrimeParams params;
  params.p = p;
  params.period = 2 * p * p;
  params.p_mod_4 = static_cast<unsigned>(p % 4);
  const Int p2 = p * p;
  params.two_primitive_root_mod_p2 = order_mod(2, p2) == p * (p - 1);
  params.non_wieferich = pow_mod(2, p - 1, p2) != 1;
  return params;
}

namespace {

void require_unit_mod_2p(Int u, Int p, const char* what) {
  if (gcd(u, 2 * p) != 1) {
    throw InvalidArgument(std::string(what) + ": gcd(" + std::to_string(u) +
                          ", 2p) != 1");
  }
}

}  // namespace

bool quotient_shift_identity(Int u, Int t, Int p) {
  const Int m = 2 * p;
  require_unit_mod_2p(u, p, "quotient_shift_identity");
  const Int lhs = euler_quotient(u + m * t, m);
  const Int step = mul_mod(mul_mod(t % m, p - 1, m), inverse_mod(u, m), m);
  const Int rhs = (euler_quotient(u, m) + step) % m;
  return lhs == rhs;
}

bool quotient_multiplicative_identity(Int u, Int v, Int p) {
  const Int m = 2 * p;
  require_unit_mod_2p(u, p, "quotient_multiplicative_identity");
  require_unit_mod_2p(v, p, "quotient_multiplicative_identity");
  const Int lhs = euler_quotient(u * v, m);
  const Int rhs = (euler_quotient(u, m) + euler_quotient(v, m)) % m;
  return lhs == rhs;
}

std::vector<Int> primes_in_range(Int lo, Int hi) {
  std::vector<Int> out;
  for (Int n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == hi) break;
  }
  return out;
}

}  // namespace eqa
