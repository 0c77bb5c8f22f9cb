#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "episodes/miner.hpp"

using namespace episodes;

namespace {

void BM_MineZipf(benchmark::State& state) {
  const auto s = bench::zipf_sequence(static_cast<std::size_t>(state.range(0)), 5000, 1);
  MiningConfig c;
  c.window = 15;
  c.min_freq = static_cast<std::uint64_t>(state.range(1));
  std::size_t closed = 0;
  for (auto _ : state) {
    const auto r = mine(s, c);
    closed = r.closed.size();
    benchmark::DoNotOptimize(r);
  }
  state.counters["i_closed"] = static_cast<double>(closed);
}

void BM_MineUniform(benchmark::State& state) {
  const auto s = bench::uniform_sequence(static_cast<std::size_t>(state.range(0)), 6, 3);
  MiningConfig c;
  c.window = 6;
  c.min_freq = static_cast<std::uint64_t>(state.range(0) / 100);
  c.measure = Measure::disjoint;
  for (auto _ : state) benchmark::DoNotOptimize(mine(s, c));
}

}  // namespace

BENCHMARK(BM_MineZipf)->Args({20000, 600})->Args({100000, 3000})->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_MineUniform)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
