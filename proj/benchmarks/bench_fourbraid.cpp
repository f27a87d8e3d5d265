#include <benchmark/benchmark.h>

#include "qweyl/braidrep.hpp"
#include "qweyl/rmatrix.hpp"
#include "qweyl/twist.hpp"

using namespace qweyl;

static void BM_RMatrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(r_matrix(d, d));
}
BENCHMARK(BM_RMatrix)->DenseRange(2, 5);

static void BM_Twist(benchmark::State& state) {
  TwistConfig c;
  c.beta1 = RingElem::x_pow(4);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(twist_t(d, c));
}
BENCHMARK(BM_Twist)->DenseRange(2, 6);

static void BM_FourBraid(benchmark::State& state) {
  TwistConfig c;
  c.beta1 = 1;
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_four_braid(d, d, c));
}
BENCHMARK(BM_FourBraid)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_ZB3Suite(benchmark::State& state) {
  TwistConfig c;
  c.beta1 = 1;
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_zbn_relations(d, 3, c));
}
BENCHMARK(BM_ZB3Suite)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
