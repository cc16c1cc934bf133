#include <benchmark/benchmark.h>

#include "eqa/gf2poly.hpp"

namespace {

void BM_GcdWithXPowTMinusOne(benchmark::State& state) {
  const eqa::Int p = static_cast<eqa::Int>(state.range(0));
  const auto seq = eqa::generate(eqa::classify_prime(p));
  const auto modulus = eqa::Gf2Poly::x_pow_minus_one(seq.period());
  const auto s = eqa::Gf2Poly::from_sequence(seq);
  for (auto _ : state) benchmark::DoNotOptimize(eqa::poly_gcd(modulus, s));
}
BENCHMARK(BM_GcdWithXPowTMinusOne)->Arg(5)->Arg(11)->Arg(13)->Arg(37);

void BM_RemainderByPhi3Squared(benchmark::State& state) {
  const eqa::Int p = static_cast<eqa::Int>(state.range(0));
  const auto seq = eqa::generate(eqa::classify_prime(p));
  const auto d = eqa::DivisorExponents(0, 0, 2).polynomial(p);
  const auto s = eqa::Gf2Poly::from_sequence(seq);
  for (auto _ : state) benchmark::DoNotOptimize(eqa::poly_rem(s, d));
}
BENCHMARK(BM_RemainderByPhi3Squared)->Arg(5)->Arg(13)->Arg(37);

void BM_StructuralPhi3SqTest(benchmark::State& state) {
  const eqa::Int p = static_cast<eqa::Int>(state.range(0));
  const auto seq = eqa::generate(eqa::classify_prime(p));
  for (auto _ : state) benchmark::DoNotOptimize(eqa::divides_phi3_sq(seq, p));
}
BENCHMARK(BM_StructuralPhi3SqTest)->Arg(5)->Arg(13)->Arg(37);

void BM_PolyMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::size_t> a, b;
  for (std::size_t i = 0; i < n; i += 3) a.push_back(i);
  for (std::size_t i = 0; i < n; i += 5) b.push_back(i);
  const auto f = eqa::Gf2Poly::from_exponents(a);
  const auto g = eqa::Gf2Poly::from_exponents(b);
  for (auto _ : state) benchmark::DoNotOptimize(eqa::poly_mul(f, g));
}
BENCHMARK(BM_PolyMul)->Arg(256)->Arg(2048)->Arg(8192);

}  // namespace
