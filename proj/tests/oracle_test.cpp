#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "atomroute/braess.hpp"
#include "atomroute/error.hpp"
#include "atomroute/oracle.hpp"
#include "support/random_instances.hpp"

namespace atomroute {
namespace {

GameInstance fan(const std::vector<std::size_t>& path_counts) {
  // Player i routes s_i -> t_i over path_counts[i] parallel edges.
  GameInstance g;
  for (std::size_t i = 0; i < path_counts.size(); ++i) {
    const std::string s = "s" + std::to_string(i), t = "t" + std::to_string(i);
    g.nodes.push_back(s);
    g.nodes.push_back(t);
    for (std::size_t k = 0; k < path_counts[i]; ++k) {
      g.edges.push_back({s + "-" + std::to_string(k), s, t, 1, double(k), PriceSpec::zero(), 1, 0});
    }
    g.commodities.push_back({"p" + std::to_string(i), s, t, 1.0});
  }
  return with_paths(std::move(g));
}

// Classic Braess social cost for two players of demand 1/2, written out by
// hand for each (path, path) pair; path 0 top, 1 zigzag, 2 bottom.
double braess_two_player_sc(std::size_t p, std::size_t q, double u, double c1, double c2) {
  const double r = 0.5;
  auto on = [](std::size_t path, bool top_edge) {
    return top_edge ? (path == 0 || path == 1) : (path == 1 || path == 2);
  };
  const double f_sv = r * (on(p, true) + on(q, true));
  const double f_wt = r * (on(p, false) + on(q, false));
  auto cost = [&](std::size_t path) {
    double c = 0.0;
    if (on(path, true)) c += c1 * f_sv + c2 * u;
    if (on(path, false)) c += c1 * f_wt + c2 * u;
    if (path == 0 || path == 2) c += 1.0;  // v-t or s-w
    return c;
  };
  return r * cost(p) + r * cost(q);
}

TEST(ProfileCount, ProductRule) {
  EXPECT_EQ(profile_count(build_classic_braess(2).after), 9u);
  EXPECT_EQ(profile_count(fan({1, 1, 1, 1, 1})), 1u);
  EXPECT_EQ(profile_count(fan({2, 3, 4})), 24u);
}

TEST(ProfileCount, Overflow) {
  GameInstance g = fan({2});
  g.paths.assign(64, g.paths[0]);
  g.commodities.assign(64, g.commodities[0]);
  EXPECT_THROW(profile_count(g), Error);
  g.paths.resize(62);
  g.commodities.resize(62);
  EXPECT_EQ(profile_count(g), std::uint64_t{1} << 62);
}

TEST(ProfileIndex, MixedRadixRoundTrip) {
  const GameInstance g = fan({2, 3, 4});
  for (std::uint64_t k = 0; k < 24; ++k) EXPECT_EQ(profile_index(g, profile_at(g, k)), k);
  EXPECT_EQ(profile_at(g, 23).choice, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(profile_at(g, 4).choice, (std::vector<std::size_t>{0, 1, 0}));
}

TEST(FindAllEquilibria, BraessWithoutBridgeTwoPlayers) {
  // Hand check: both on one side cost 2 each and either can drop to 1.5;
  // a split costs 1.5 each and moving costs 2.
  const GameInstance g = build_classic_braess(2).before;
  const auto eqs = find_all_equilibria(g);
  ASSERT_EQ(eqs.size(), 2u);
  EXPECT_EQ(eqs[0].choice, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(eqs[1].choice, (std::vector<std::size_t>{1, 0}));
}

TEST(FindAllEquilibria, BraessWithBridgeContainsAllZigzag) {
  const auto eqs = find_all_equilibria(build_classic_braess(2).after);
  EXPECT_NE(std::find(eqs.begin(), eqs.end(), StrategyProfile{{1, 1}}), eqs.end());
}

TEST(FindAllEquilibria, SinglePathInstance) {
  const auto eqs = find_all_equilibria(fan({1, 1, 1}));
  ASSERT_EQ(eqs.size(), 1u);
  EXPECT_EQ(eqs[0].choice, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(FindAllEquilibria, CapExceeded) {
  EXPECT_THROW(find_all_equilibria(build_classic_braess(2).after, {8}), CapExceeded);
  EXPECT_NO_THROW(find_all_equilibria(build_classic_braess(2).after, {9}));
}

TEST(FindAllEquilibria, OmittedProfilesHaveWitnesses) {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 40; ++k) {
    const GameInstance g = testing::random_instance(rng);
    const auto analysis = analyze_exhaustively(g);
    std::size_t next = 0;
    for (std::uint64_t index = 0; index < analysis.profile_count; ++index) {
      const auto report = is_equilibrium(g, profile_at(g, index));
      const bool listed =
          next < analysis.equilibria.size() && analysis.equilibria[next].index == index;
      ASSERT_EQ(listed, report.is_equilibrium);
      ASSERT_EQ(!listed, report.witness.has_value());
      if (listed) ++next;
    }
  }
}

TEST(OptimalProfile, ClassicBraessBruteForce) {
  const GameInstance g = build_classic_braess(2).after;
  double best = INFINITY;
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t q = 0; q < 3; ++q) best = std::min(best, braess_two_player_sc(p, q, 0, 1, 0));
  }
  EXPECT_DOUBLE_EQ(best, 1.5);
  const ScoredProfile opt = optimal_profile(g);
  EXPECT_NEAR(opt.social_cost, best, 1e-12);
  EXPECT_EQ(opt.profile.choice, (std::vector<std::size_t>{0, 2}));  // lowest-index split
}

TEST(OptimalProfile, PricedBraessBruteForce) {
  const GameInstance g = build_priced_braess(2, PriceSpec::identity()).after;
  double best = INFINITY;
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t q = 0; q < 3; ++q) {
      const double sc = braess_two_player_sc(p, q, 1.0, 0.5, 0.5);
      EXPECT_NEAR(social_cost(g, StrategyProfile{{p, q}}), sc, 1e-12);
      best = std::min(best, sc);
    }
  }
  EXPECT_DOUBLE_EQ(best, (5.0 + 2.0) / 4.0);
  EXPECT_NEAR(optimal_profile(g).social_cost, 1.75, 1e-12);
}

TEST(OptimalProfile, SinglePath) {
  EXPECT_EQ(optimal_profile(fan({1, 1})).index, 0u);
}

TEST(PriceOfAnarchy, ClassicBraessFourThirds) {
  const PoAReport report = price_of_anarchy(build_classic_braess(2).after);
  EXPECT_NEAR(report.poa, 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(report.worst_equilibrium_social_cost, 2.0, 1e-12);
  EXPECT_NEAR(report.optimal_social_cost, 1.5, 1e-12);
  EXPECT_TRUE(report.within_bound);
  EXPECT_DOUBLE_EQ(report.bound, (3.0 + std::sqrt(5.0)) / 2.0);
}

TEST(PriceOfAnarchy, SinglePathIsOne) {
  const PoAReport report = price_of_anarchy(fan({1, 1, 1}));
  EXPECT_EQ(report.poa, 1.0);
  EXPECT_EQ(report.equilibrium_count, 1u);
}

TEST(PriceOfAnarchy, NoEquilibriumIsReported) {
  ExhaustiveAnalysis empty;
  empty.profile_count = 4;
  EXPECT_THROW(price_of_anarchy(empty), NoEquilibrium);
}

TEST(PriceOfAnarchy, ZeroCostOptimum) {
  GameInstance g;
  g.nodes = {"s", "t"};
  g.edges = {{"e", "s", "t", 0, 0, PriceSpec::zero(), 1, 0}};
  g.commodities = {{"p", "s", "t", 1}};
  EXPECT_EQ(price_of_anarchy(with_paths(g)).poa, 1.0);
}

TEST(PriceOfAnarchy, RandomSweepWithinBound) {
  std::mt19937_64 rng(71);
  double worst = 1.0;
  for (int k = 0; k < 200; ++k) {
    const GameInstance g = testing::random_instance(rng);
    const PoAReport report = price_of_anarchy(g);
    EXPECT_GE(report.poa, 1.0 - 1e-12);
    EXPECT_TRUE(report.within_bound) << report.poa;
    worst = std::max(worst, report.poa);
  }
  EXPECT_LE(worst, kPoABound + 1e-6);
}

TEST(Oracle, DynamicsEquilibriaAreListed) {
  std::mt19937_64 rng(81);
  for (int k = 0; k < 80; ++k) {
    const GameInstance g = testing::random_instance(rng);
    const auto analysis = analyze_exhaustively(g);
    const auto run = run_best_response_dynamics(g, testing::random_profile(rng, g));
    ASSERT_TRUE(run.converged);
    const std::uint64_t index = profile_index(g, run.final_profile);
    const bool found = std::any_of(analysis.equilibria.begin(), analysis.equilibria.end(),
                                   [&](const ScoredProfile& eq) { return eq.index == index; });
    EXPECT_TRUE(found);
  }
}

TEST(Oracle, WorkersDoNotChangeResults) {
  std::mt19937_64 rng(91);
  for (int k = 0; k < 20; ++k) {
    const GameInstance g = testing::random_instance(rng);
    const auto serial = analyze_exhaustively(g, {kDefaultProfileCap, 1e-9, 1});
    for (unsigned workers : {2u, 3u, 7u, 64u}) {
      const auto parallel = analyze_exhaustively(g, {kDefaultProfileCap, 1e-9, workers});
      ASSERT_EQ(parallel.equilibria.size(), serial.equilibria.size());
      for (std::size_t e = 0; e < serial.equilibria.size(); ++e) {
        EXPECT_EQ(parallel.equilibria[e].index, serial.equilibria[e].index);
        EXPECT_EQ(parallel.equilibria[e].social_cost, serial.equilibria[e].social_cost);
      }
      EXPECT_EQ(parallel.optimum.index, serial.optimum.index);
      EXPECT_EQ(parallel.optimum.social_cost, serial.optimum.social_cost);
      EXPECT_EQ(parallel.worst_equilibrium.index, serial.worst_equilibrium.index);
    }
  }
}

}  // namespace
}  // namespace atomroute
