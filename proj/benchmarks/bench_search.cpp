#include <benchmark/benchmark.h>

#include "sausage4/covering_search.hpp"
#include "sausage4/d4_lattice.hpp"

using namespace sausage4;

static void BM_OracleCount(benchmark::State& state) {
  const TruncationSpec spec{state.range(0), {0, 1, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(count_points_oracle(spec));
}
BENCHMARK(BM_OracleCount)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_ScanM17(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_m17());
}
BENCHMARK(BM_ScanM17)->Unit(benchmark::kMillisecond);

static void BM_Coverage(benchmark::State& state) {
  const std::int64_t m_to = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(build_coverage(17, m_to, CoverageMode::shrunken));
}
BENCHMARK(BM_Coverage)->Arg(40)->Arg(104)->Unit(benchmark::kMillisecond);

static void BM_TailCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certify_tail());
}
BENCHMARK(BM_TailCertificate)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
