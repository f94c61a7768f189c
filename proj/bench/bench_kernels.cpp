#include <benchmark/benchmark.h>

#include "sprs/centrality.hpp"
#include "sprs/generate.hpp"
#include "sprs/shortest_paths.hpp"

namespace {

sprs::Graph bench_graph(const benchmark::State& state, bool directed) {
  const auto n = static_cast<std::size_t>(state.range(0));
  return sprs::random_graph(sprs::GraphSpec{n, 4 * n, directed, 1, 64, true}, 42);
}

void BM_ApspSerial(benchmark::State& state) {
  const auto g = bench_graph(state, true);
  for (auto _ : state) benchmark::DoNotOptimize(sprs::apsp_serial(g));
}

void BM_ApspParallel(benchmark::State& state) {
  const auto g = bench_graph(state, true);
  for (auto _ : state) benchmark::DoNotOptimize(sprs::apsp(g));
}

void BM_AnbcSerial(benchmark::State& state) {
  const auto g = bench_graph(state, true);
  for (auto _ : state) benchmark::DoNotOptimize(sprs::anbc_strict_serial(g));
}

void BM_AnbcParallel(benchmark::State& state) {
  const auto g = bench_graph(state, true);
  for (auto _ : state) benchmark::DoNotOptimize(sprs::anbc_strict(g));
}

}  // namespace

BENCHMARK(BM_ApspSerial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApspParallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnbcSerial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnbcParallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
