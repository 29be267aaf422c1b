#include <benchmark/benchmark.h>

#include "atomroute/braess.hpp"
#include "atomroute/oracle.hpp"

namespace atomroute {
namespace {

void BM_ExhaustiveBraess(benchmark::State& state) {
  const GameInstance g = build_classic_braess(state.range(0)).after;
  OracleOptions options;
  options.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_exhaustively(g, options));
  state.counters["profiles"] = static_cast<double>(profile_count(g));
}
BENCHMARK(BM_ExhaustiveBraess)
    ->Args({6, 1})
    ->Args({10, 1})
    ->Args({10, 4})
    ->Unit(benchmark::kMillisecond);

void BM_PricedExperiment(benchmark::State& state) {
  const BraessPair pair = build_priced_braess(10, PriceSpec::sine());
  for (auto _ : state) benchmark::DoNotOptimize(edge_addition_experiment(pair.before, pair.after));
}
BENCHMARK(BM_PricedExperiment)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace atomroute
