#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "episodes/closure.hpp"
#include "episodes/episode_io.hpp"
#include "episodes/scanner.hpp"

using namespace episodes;

namespace {

constexpr const char* kSerial = "nodes=[a,b,c,d] edges=[(0,1),(0,2),(0,3),(1,2),(1,3),(2,3)]";
constexpr const char* kParallel = "nodes=[a,b,c,d] edges=[]";
constexpr const char* kDiamond = "nodes=[a,b,c,d] edges=[(0,1),(0,2),(0,3),(1,3),(2,3)]";

void scan(benchmark::State& state, const char* literal) {
  const auto s = bench::uniform_sequence(static_cast<std::size_t>(state.range(0)), 6, 1);
  const Episode g = parse_episode(literal, s.alphabet());
  Scanner scanner(s);
  for (auto _ : state) benchmark::DoNotOptimize(scanner.minimal_windows(g, 12));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["visits/event"] =
      static_cast<double>(scanner.stats().event_visits) / static_cast<double>(state.iterations() * state.range(0));
}

void BM_ScanSerial(benchmark::State& state) { scan(state, kSerial); }
void BM_ScanParallel(benchmark::State& state) { scan(state, kParallel); }
void BM_ScanDiamond(benchmark::State& state) { scan(state, kDiamond); }

void BM_IClosure(benchmark::State& state) {
  const auto s = bench::uniform_sequence(static_cast<std::size_t>(state.range(0)), 6, 2);
  ClosureEngine engine(s, 8);
  const Episode g = parse_episode("nodes=[a,b,c] edges=[]", s.alphabet());
  for (auto _ : state) benchmark::DoNotOptimize(engine.i_closure(g));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(BM_ScanParallel)->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(BM_ScanDiamond)->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(BM_IClosure)->RangeMultiplier(4)->Range(1 << 12, 1 << 16);
