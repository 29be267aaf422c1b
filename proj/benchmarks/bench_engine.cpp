#include <benchmark/benchmark.h>

#include <random>

#include "atomroute/braess.hpp"
#include "atomroute/engine.hpp"
#include "support/random_instances.hpp"

namespace atomroute {
namespace {

void BM_SocialCost(benchmark::State& state) {
  const GameInstance g = build_priced_braess(state.range(0), PriceSpec::log1p()).after;
  const CostModel model(g);
  std::mt19937_64 rng(7);
  const StrategyProfile profile = testing::random_profile(rng, g);
  for (auto _ : state) {
    const EdgeLoads loads = model.loads(profile);
    benchmark::DoNotOptimize(model.social_cost(profile, loads));
  }
}
BENCHMARK(BM_SocialCost)->Arg(10)->Arg(100)->Arg(1000);

void BM_IsEquilibrium(benchmark::State& state) {
  const GameInstance g = build_priced_braess(state.range(0), PriceSpec::identity()).after;
  const CostModel model(g);
  const StrategyProfile profile{std::vector<std::size_t>(g.player_count(), 1)};
  for (auto _ : state) benchmark::DoNotOptimize(is_equilibrium(model, profile));
}
BENCHMARK(BM_IsEquilibrium)->Arg(10)->Arg(100)->Arg(1000);

void BM_DynamicsRandom(benchmark::State& state) {
  std::mt19937_64 rng(11);
  testing::RandomInstanceOptions options;
  options.max_profiles = 1u << 20;
  const GameInstance g = testing::random_instance(rng, options);
  const StrategyProfile start = testing::random_profile(rng, g);
  for (auto _ : state) benchmark::DoNotOptimize(run_best_response_dynamics(g, start));
}
BENCHMARK(BM_DynamicsRandom);

void BM_DynamicsBraess(benchmark::State& state) {
  const GameInstance g = build_classic_braess(state.range(0)).after;
  const StrategyProfile start{std::vector<std::size_t>(g.player_count(), 0)};
  for (auto _ : state) benchmark::DoNotOptimize(run_best_response_dynamics(g, start));
}
BENCHMARK(BM_DynamicsBraess)->Arg(10)->Arg(100);

}  // namespace
}  // namespace atomroute
