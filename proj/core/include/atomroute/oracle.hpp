#pragma once

// Exhaustive ground truth over every strategy profile of a small instance:
// all pure equilibria, the social optimum, the worst equilibrium and the
// Price of Anarchy.
//
// Profiles are numbered by a mixed-radix counter over the players' path
// indices, player 0 most significant, so profile order is lexicographic in
// the choice vector. This index breaks every tie.

#include <cstdint>
#include <vector>

#include "atomroute/engine.hpp"

namespace atomroute {

inline constexpr std::uint64_t kDefaultProfileCap = 200'000;

// (3 + sqrt 5) / 2
inline constexpr double kPoABound = 2.6180339887498949;

struct OracleOptions {
  std::uint64_t cap = kDefaultProfileCap;
  double epsilon = kDefaultImproveEpsilon;
  // Contiguous index ranges evaluated in parallel; results do not depend on it.
  unsigned workers = 1;
};

// Product of the path-list sizes. Throws Error when it does not fit in 63 bits.
std::uint64_t profile_count(const GameInstance& instance);

StrategyProfile profile_at(const GameInstance& instance, std::uint64_t index);
std::uint64_t profile_index(const GameInstance& instance, const StrategyProfile& profile);

// Equilibrium test written directly from the definition: for each player and
// each alternative path, rebuild the deviated profile, recompute its loads
// from scratch and compare. Independent of the incremental logic in
// is_equilibrium().
bool satisfies_equilibrium_definition(const CostModel& model, const StrategyProfile& profile,
                                      double epsilon = kDefaultImproveEpsilon);

struct ScoredProfile {
  StrategyProfile profile;
  std::uint64_t index = 0;
  double social_cost = 0.0;
};

struct ExhaustiveAnalysis {
  std::uint64_t profile_count = 0;
  // Ascending by profile index.
  std::vector<ScoredProfile> equilibria;
  // Minimum social cost, lowest index on ties.
  ScoredProfile optimum;
  // Equilibrium with maximum social cost, lowest index on ties. Meaningless
  // when `equilibria` is empty.
  ScoredProfile worst_equilibrium;
};

// Throws CapExceeded when profile_count exceeds options.cap.
ExhaustiveAnalysis analyze_exhaustively(const GameInstance& instance,
                                        const OracleOptions& options = {});

std::vector<StrategyProfile> find_all_equilibria(const GameInstance& instance,
                                                 const OracleOptions& options = {});

ScoredProfile optimal_profile(const GameInstance& instance, const OracleOptions& options = {});

struct PoAReport {
  StrategyProfile optimal_profile;
  double optimal_social_cost = 0.0;
  StrategyProfile worst_equilibrium_profile;
  double worst_equilibrium_social_cost = 0.0;
  std::uint64_t equilibrium_count = 0;
  std::uint64_t profile_count = 0;
  double poa = 1.0;
  double bound = kPoABound;
  bool within_bound = true;
};

// Throws NoEquilibrium when the exhaustive search finds none.
PoAReport price_of_anarchy(const GameInstance& instance, const OracleOptions& options = {});
PoAReport price_of_anarchy(const ExhaustiveAnalysis& analysis);

// Slack allowed above kPoABound before within_bound turns false.
inline constexpr double kPoABoundSlack = 1e-6;

}  // namespace atomroute
