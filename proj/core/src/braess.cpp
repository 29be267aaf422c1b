#include "atomroute/braess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "atomroute/error.hpp"

namespace atomroute {
namespace {

void require_even(std::size_t n) {
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("Braess constructions need an even, positive player count");
  }
}

void require_mixing(double c1, double c2) {
  if (!(c1 >= 0.0 && c1 <= 1.0 && c2 >= 0.0 && c2 <= 1.0) ||
      std::abs(c1 + c2 - 1.0) > kMixingTolerance) {
    throw std::invalid_argument("mixing coefficients not normalized");
  }
}

EdgeSpec variable_edge(std::string id, NodeId from, NodeId to, const PriceSpec& price,
                       double c1, double c2) {
  return {std::move(id), std::move(from), std::move(to), 1.0, 0.0, price, c1, c2};
}

EdgeSpec constant_edge(std::string id, NodeId from, NodeId to) {
  return {std::move(id), std::move(from), std::move(to), 0.0, 1.0, PriceSpec::zero(), 1.0, 0.0};
}

BraessPair build_pair(std::size_t n, const PriceSpec& price, double c1, double c2) {
  GameInstance before;
  before.nodes = {"s", "v", "w", "t"};
  before.edges = {variable_edge("s-v", "s", "v", price, c1, c2),
                  constant_edge("v-t", "v", "t"),
                  constant_edge("s-w", "s", "w"),
                  variable_edge("w-t", "w", "t", price, c1, c2)};
  const double demand = 1.0 / static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) {
    before.commodities.push_back({"p" + std::to_string(i), "s", "t", demand});
  }
  GameInstance after = before;
  after.edges.push_back({"v-w", "v", "w", 0.0, 0.0, PriceSpec::zero(), 1.0, 0.0});

  before.construction = BraessConstruction{n, price, c1, c2, false};
  after.construction = BraessConstruction{n, price, c1, c2, true};
  return {with_paths(std::move(before)), with_paths(std::move(after))};
}

SideReport evaluate_side(const GameInstance& instance, const ExperimentOptions& options) {
  const GameInstance prepared = instance.has_paths() ? instance : with_paths(instance);
  const CostModel model(prepared);
  SideReport side;
  if (options.method == ExperimentMethod::oracle) {
    const ExhaustiveAnalysis analysis = analyze_exhaustively(prepared, options.oracle);
    if (analysis.equilibria.empty()) {
      throw NoEquilibrium("exhaustive search found no pure equilibrium");
    }
    side.profile = analysis.worst_equilibrium.profile;
    side.equilibrium_count = analysis.equilibria.size();
  } else {
    StrategyProfile start{std::vector<std::size_t>(prepared.player_count(), 0)};
    DynamicsResult run = run_best_response_dynamics(prepared, start, options.dynamics);
    if (!run.converged) {
      throw NoEquilibrium("best-response dynamics did not converge within " +
                          std::to_string(options.dynamics.max_moves) + " moves");
    }
    side.profile = std::move(run.final_profile);
  }
  const EdgeLoads loads = model.loads(side.profile);
  side.social_cost = model.social_cost(side.profile, loads);
  for (std::size_t i = 0; i < model.player_count(); ++i) {
    side.unit_cost = std::max(side.unit_cost,
                              model.path_cost(loads, i, model.path(i, side.profile.choice[i])));
  }
  return side;
}

}  // namespace

BraessPair build_classic_braess(std::size_t n) {
  require_even(n);
  return build_pair(n, PriceSpec::zero(), 1.0, 0.0);
}

BraessPair build_priced_braess(std::size_t n, const PriceSpec& price, double c1, double c2) {
  require_even(n);
  require_mixing(c1, c2);
  if (auto bad = check_price_params(price)) throw std::invalid_argument(*bad);
  if (c2 == 0.0) return build_classic_braess(n);
  return build_pair(n, price, c1, c2);
}

double rho_formula(double u, double c1, double c2) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("unit price must lie in [0,1]");
  require_mixing(c1, c2);
  return 4.0 * (c1 + c2 * u) / (2.0 + c1 + 2.0 * c2 * u);
}

std::string_view to_string(ExperimentMethod method) {
  return method == ExperimentMethod::oracle ? "oracle" : "dynamics";
}

BraessReport edge_addition_experiment(const GameInstance& before, const GameInstance& after,
                                      const ExperimentOptions& options) {
  if (before.commodities != after.commodities) {
    throw std::invalid_argument("edge-addition pair must share its commodities");
  }
  BraessReport report;
  report.method = options.method;
  report.n_players = before.player_count();
  report.before = evaluate_side(before, options);
  report.after = evaluate_side(after, options);
  report.rho = report.after.unit_cost / report.before.unit_cost;

  const auto& tb = before.construction;
  const auto& ta = after.construction;
  if (tb && ta && !tb->with_bridge && ta->with_bridge && tb->players == ta->players &&
      tb->price == ta->price && tb->c1 == ta->c1 && tb->c2 == ta->c2) {
    const double u = eval_u(tb->price, 1.0 / static_cast<double>(tb->players));
    report.formula_rho = rho_formula(u, tb->c1, tb->c2);
    report.price = tb->price;
  }
  return report;
}

}  // namespace atomroute
