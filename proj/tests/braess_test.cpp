#include <gtest/gtest.h>

#include <cmath>

#include "atomroute/braess.hpp"
#include "atomroute/scenario.hpp"

namespace atomroute {
namespace {

TEST(BuildClassic, Structure) {
  const BraessPair pair = build_classic_braess(10);
  EXPECT_EQ(pair.before.edges.size(), 4u);
  EXPECT_EQ(pair.after.edges.size(), 5u);
  EXPECT_EQ(pair.before.commodities, pair.after.commodities);
  double total = 0.0;
  for (const auto& c : pair.before.commodities) total += c.demand;
  EXPECT_NEAR(total, 1.0, 1e-15);
  EXPECT_TRUE(validate_instance(pair.before).ok());
  EXPECT_TRUE(validate_instance(pair.after).ok());
}

TEST(BuildClassic, RejectsOddOrZero) {
  EXPECT_THROW(build_classic_braess(3), std::invalid_argument);
  EXPECT_THROW(build_classic_braess(0), std::invalid_argument);
}

TEST(BuildPriced, RejectsBadCoefficients) {
  EXPECT_THROW(build_priced_braess(4, PriceSpec::identity(), 0.6, 0.5), std::invalid_argument);
  EXPECT_THROW(build_priced_braess(4, PriceSpec::identity(), 1.2, -0.2), std::invalid_argument);
  EXPECT_THROW(build_priced_braess(5, PriceSpec::identity()), std::invalid_argument);
  EXPECT_THROW(build_priced_braess(4, PriceSpec::saturating(0)), std::invalid_argument);
}

TEST(BuildPriced, ZeroPriceWeightReducesToClassic) {
  for (std::size_t n : {2u, 4u, 10u}) {
    const BraessPair classic = build_classic_braess(n);
    const BraessPair priced = build_priced_braess(n, PriceSpec::sine(), 1.0, 0.0);
    EXPECT_EQ(serialize_scenario(priced.before), serialize_scenario(classic.before));
    EXPECT_EQ(serialize_scenario(priced.after), serialize_scenario(classic.after));
  }
}

TEST(RhoFormula, Endpoints) {
  EXPECT_NEAR(rho_formula(1.0, 0.5, 0.5), 8.0 / 7.0, 1e-15);
  for (double u : {0.0, 0.3, 1.0}) EXPECT_NEAR(rho_formula(u, 1.0, 0.0), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(rho_formula(1.0, 0.0, 1.0), 1.0, 1e-15);
}

TEST(RhoFormula, MatchesHalfHalfForm) {
  for (double u = 0.0; u <= 1.0; u += 0.01) {
    EXPECT_NEAR(rho_formula(u, 0.5, 0.5), (4 + 4 * u) / (5 + 2 * u), 1e-14);
  }
}

TEST(RhoFormula, NondecreasingInUnitPrice) {
  const auto grid = linear_grid(0.0, 1.0, 1001);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    EXPECT_GE(rho_formula(grid[k], 0.5, 0.5), rho_formula(grid[k - 1], 0.5, 0.5));
  }
}

TEST(RhoFormula, RangeErrors) {
  EXPECT_THROW(rho_formula(1.1, 0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(rho_formula(-0.1, 0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(rho_formula(0.5, 0.5, 0.6), std::invalid_argument);
}

TEST(Experiment, ClassicFourThirds) {
  const BraessPair pair = build_classic_braess(10);
  const BraessReport report = edge_addition_experiment(pair.before, pair.after);
  EXPECT_NEAR(report.before.unit_cost, 1.5, 1e-12);
  EXPECT_NEAR(report.after.unit_cost, 2.0, 1e-12);
  EXPECT_NEAR(report.rho, 4.0 / 3.0, 1e-12);
  ASSERT_TRUE(report.formula_rho.has_value());
  EXPECT_NEAR(*report.formula_rho, 4.0 / 3.0, 1e-15);
  EXPECT_EQ(report.n_players, 10u);
}

TEST(Experiment, PricedEightSevenths) {
  const BraessPair pair = build_priced_braess(10, PriceSpec::identity());
  const BraessReport report = edge_addition_experiment(pair.before, pair.after);
  EXPECT_NEAR(report.before.unit_cost, 1.75, 1e-12);
  EXPECT_NEAR(report.after.unit_cost, 2.0, 1e-12);
  EXPECT_NEAR(report.rho, 8.0 / 7.0, 1e-12);
  ASSERT_TRUE(report.price.has_value());
  EXPECT_EQ(report.price->family, PriceFamily::identity);
}

TEST(Experiment, Log1pFourPlayers) {
  const BraessPair pair = build_priced_braess(4, PriceSpec::log1p());
  const BraessReport report = edge_addition_experiment(pair.before, pair.after);
  const double u = std::log(1.25) / 0.25;
  EXPECT_NEAR(u, 0.892574, 1e-6);
  EXPECT_NEAR(report.rho, rho_formula(u, 0.5, 0.5), 1e-9);
  EXPECT_NEAR(report.rho, 1.1157, 1e-4);
}

TEST(Experiment, FormulaAgreementAcrossFamiliesAndSizes) {
  for (const PriceSpec& price : {PriceSpec::identity(), PriceSpec::sine(), PriceSpec::log1p(),
                                 PriceSpec::saturating(1.0), PriceSpec::saturating(4.0)}) {
    for (std::size_t n : {2u, 4u, 10u}) {
      const BraessPair pair = build_priced_braess(n, price);
      const BraessReport report = edge_addition_experiment(pair.before, pair.after);
      ASSERT_TRUE(report.formula_rho.has_value());
      EXPECT_NEAR(report.rho, *report.formula_rho, 1e-9) << describe(price) << " n=" << n;
    }
  }
}

TEST(Experiment, MixingSweepAgreesWithFormula) {
  for (double c1 : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const BraessPair pair = build_priced_braess(4, PriceSpec::identity(), c1, 1.0 - c1);
    const BraessReport report = edge_addition_experiment(pair.before, pair.after);
    EXPECT_NEAR(report.rho, rho_formula(1.0, c1, 1.0 - c1), 1e-9) << "c1=" << c1;
  }
}

TEST(Experiment, IndependentOfPlayerCount) {
  for (std::size_t n : {2u, 4u, 6u, 8u, 10u}) {
    const BraessPair classic = build_classic_braess(n);
    EXPECT_NEAR(edge_addition_experiment(classic.before, classic.after).rho, 4.0 / 3.0, 1e-12);
    const BraessPair priced = build_priced_braess(n, PriceSpec::identity());
    EXPECT_NEAR(edge_addition_experiment(priced.before, priced.after).rho, 8.0 / 7.0, 1e-12);
  }
}

TEST(Experiment, DynamicsMethodOnClassicPair) {
  const BraessPair pair = build_classic_braess(10);
  ExperimentOptions options;
  options.method = ExperimentMethod::dynamics;
  const BraessReport report = edge_addition_experiment(pair.before, pair.after, options);
  EXPECT_NEAR(report.before.unit_cost, 1.5, 1e-12);
  EXPECT_NEAR(report.after.unit_cost, 2.0, 1e-12);
  EXPECT_EQ(report.before.equilibrium_count, 0u);
}

TEST(Experiment, UntaggedPairHasNoFormula) {
  BraessPair pair = build_classic_braess(4);
  pair.before.construction.reset();
  const BraessReport report = edge_addition_experiment(pair.before, pair.after);
  EXPECT_FALSE(report.formula_rho.has_value());
  EXPECT_NEAR(report.rho, 4.0 / 3.0, 1e-12);
}

TEST(Experiment, ParsedScenariosWork) {
  const BraessPair built = build_priced_braess(4, PriceSpec::sine());
  const GameInstance before = parse_scenario(serialize_scenario(built.before));
  const GameInstance after = parse_scenario(serialize_scenario(built.after));
  const BraessReport report = edge_addition_experiment(before, after);
  EXPECT_NEAR(report.rho, edge_addition_experiment(built.before, built.after).rho, 1e-15);
}

TEST(Experiment, MismatchedCommodities) {
  const BraessPair a = build_classic_braess(2);
  const BraessPair b = build_classic_braess(4);
  EXPECT_THROW(edge_addition_experiment(a.before, b.after), std::invalid_argument);
}

}  // namespace
}  // namespace atomroute
