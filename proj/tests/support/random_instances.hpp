#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "atomroute/engine.hpp"
#include "atomroute/model.hpp"

namespace atomroute::testing {

struct RandomInstanceOptions {
  std::size_t max_nodes = 6;
  std::size_t max_edges = 12;
  std::size_t max_players = 4;
  std::uint64_t min_profiles = 2;
  std::uint64_t max_profiles = 2000;
};

double uniform(std::mt19937_64& rng, double lo, double hi);
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n);

// Random affine instance with catalog prices, random mixing weights and
// demands in [0.05, 1]. Path lists are populated and the profile count stays
// within [min_profiles, max_profiles].
GameInstance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& options = {});

StrategyProfile random_profile(std::mt19937_64& rng, const GameInstance& instance);

// Count of simple s-t paths by plain recursion over an adjacency list of
// node indices; shares no code with enumerate_paths.
std::uint64_t count_simple_paths_dfs(const GameInstance& instance, std::size_t player);

}  // namespace atomroute::testing
