#include <benchmark/benchmark.h>

#include "localdensity/gauss.hpp"
#include "localdensity/localcount.hpp"

namespace {

using namespace localdensity;

std::int64_t ipow64(std::int64_t p, std::int64_t k) {
  std::int64_t r = 1;
  while (k-- > 0) r *= p;
  return r;
}

// r_{p^k}(m, x^2 + 3y^2 + 9z^2) for p = 3 and growing k.
void BM_CountBruteforce(benchmark::State& state) {
  const DiagonalForm q(1, 3, 9);
  const std::int64_t n = ipow64(3, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_bruteforce(2, q, n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CountBruteforce)->DenseRange(2, 8)->Complexity();

void BM_CountViaGaussFloat(benchmark::State& state) {
  const DiagonalForm q(1, 3, 9);
  const OddPrime p(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_via_gauss_float(2, q, p, state.range(0)));
  }
}
BENCHMARK(BM_CountViaGaussFloat)->DenseRange(2, 8);

void BM_CountStratified(benchmark::State& state) {
  const DiagonalForm q(1, 3, 9);
  const OddPrime p(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_stratified(2, q, p, state.range(0)));
  }
}
BENCHMARK(BM_CountStratified)->DenseRange(2, 8)->Arg(40)->Arg(200);

void BM_GaussSumExact(benchmark::State& state) {
  const OddPrime p(7);
  const BigInt a = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_sum_exact(a, p, state.range(0)));
  }
}
BENCHMARK(BM_GaussSumExact)->Arg(1)->Arg(4)->Arg(64);

void BM_GaussSumFloat(benchmark::State& state) {
  const std::uint64_t q = static_cast<std::uint64_t>(ipow64(7, state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_sum_float(5, q));
  }
}
BENCHMARK(BM_GaussSumFloat)->DenseRange(1, 5);

}  // namespace
