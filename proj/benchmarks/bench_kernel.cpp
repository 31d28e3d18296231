#include <benchmark/benchmark.h>

#include "sausage4/constants.hpp"
#include "sausage4/interval.hpp"
#include "sausage4/packing_formulas.hpp"

using namespace sausage4;

static void BM_IntervalMulAdd(benchmark::State& state) {
  Interval acc(0.0);
  const Interval x = constant(ConstantId::pi), y = constant(ConstantId::sqrt2);
  for (auto _ : state) {
    acc = acc * y + x;
    acc = acc / Interval(3.0);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_IntervalMulAdd);

static void BM_Powi(benchmark::State& state) {
  const Interval x(-1.25, 3.5);
  for (auto _ : state) benchmark::DoNotOptimize(powi(x, 7));
}
BENCHMARK(BM_Powi);

static void BM_SteinerPolynomial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(steiner_polynomial(104, {30, 40, 51}));
}
BENCHMARK(BM_SteinerPolynomial);

static void BM_Summarize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(summarize({17, {1, 3, 4}}));
}
BENCHMARK(BM_Summarize);
