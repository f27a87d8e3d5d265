#include <benchmark/benchmark.h>

#include "qweyl/qring.hpp"

using namespace qweyl;

static void BM_QIntProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_factorial(n));
}
BENCHMARK(BM_QIntProduct)->Arg(4)->Arg(8)->Arg(12);

static void BM_FractionAdd(benchmark::State& state) {
  const RingElem a = RingElem(1) / q_int(3);
  const RingElem b = q_power(1, 2) / (q_int(2) * q_int(4));
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_FractionAdd);

static void BM_FractionMul(benchmark::State& state) {
  const RingElem a = q_int(5) / q_int(3);
  const RingElem b = q_int(3) / (q_int(2) * q_int(5));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FractionMul);

static void BM_Gcd(benchmark::State& state) {
  const LaurentPoly a = (q_factorial(6) * q_int(7)).num();
  const LaurentPoly b = (q_factorial(5) * q_int(9)).num();
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_Gcd);
