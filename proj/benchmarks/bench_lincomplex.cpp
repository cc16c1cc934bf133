#include <benchmark/benchmark.h>

#include "eqa/lincomplex.hpp"

namespace {

void BM_BerlekampMassey(benchmark::State& state) {
  const eqa::Int p = static_cast<eqa::Int>(state.range(0));
  const auto seq = eqa::generate(eqa::classify_prime(p));
  for (auto _ : state) benchmark::DoNotOptimize(eqa::berlekamp_massey(seq));
}
BENCHMARK(BM_BerlekampMassey)->Arg(5)->Arg(11)->Arg(13)->Arg(37);

void BM_LcGcd(benchmark::State& state) {
  const eqa::Int p = static_cast<eqa::Int>(state.range(0));
  const auto seq = eqa::generate(eqa::classify_prime(p));
  for (auto _ : state) benchmark::DoNotOptimize(eqa::lc_gcd(seq));
}
BENCHMARK(BM_LcGcd)->Arg(5)->Arg(11)->Arg(13)->Arg(37);

void BM_StructuredProfile(benchmark::State& state) {
  const eqa::Int p = static_cast<eqa::Int>(state.range(0));
  const auto seq = eqa::generate(eqa::classify_prime(p));
  for (auto _ : state) benchmark::DoNotOptimize(eqa::k_error_lc_structured(seq, p));
}
BENCHMARK(BM_StructuredProfile)->Arg(5)->Arg(11)->Arg(13)->Arg(37);

void BM_BruteForceK2(benchmark::State& state) {
  const auto seq = eqa::generate(eqa::classify_prime(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eqa::k_error_lc_bruteforce(seq, 2));
  }
}
BENCHMARK(BM_BruteForceK2)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  const auto params = eqa::classify_prime(static_cast<eqa::Int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqa::generate(params));
}
BENCHMARK(BM_Generate)->Arg(11)->Arg(37);

}  // namespace
