#pragma once

// Flow evaluation, the potential function, equilibrium checks and
// best-response dynamics.
//
// A player's per-unit cost on edge e is c1*(a*f_e + b) + c2*u_e(r_i): the
// congestion term sees the total edge load, the price term only the player's
// own demand. A deviation to another path is priced at the deviated flow, so
// edges the player newly joins carry f_e + r_i.

#include <cstddef>
#include <optional>
#include <vector>

#include "atomroute/model.hpp"

namespace atomroute {

inline constexpr double kDefaultImproveEpsilon = 1e-9;

struct StrategyProfile {
  // choice[i] indexes instance.paths[i].
  std::vector<std::size_t> choice;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

struct EdgeLoads {
  std::vector<double> load;  // per edge, flow units
};

// Precomputed per-player price terms for one instance. Holds a reference:
// the instance must outlive the model. Cheap to query from several threads.
class CostModel {
 public:
  // Requires populated path lists. Throws ScenarioError otherwise, and
  // DomainError when a demand lies outside an edge's price domain.
  explicit CostModel(const GameInstance& instance);

  const GameInstance& instance() const { return *instance_; }
  std::size_t player_count() const { return demand_.size(); }
  std::size_t path_count(std::size_t player) const { return instance_->paths[player].size(); }
  const Path& path(std::size_t player, std::size_t index) const {
    return instance_->paths[player][index];
  }
  double demand(std::size_t player) const { return demand_[player]; }

  // Throws std::invalid_argument when the profile does not fit the instance.
  void check_profile(const StrategyProfile& profile) const;

  EdgeLoads loads(const StrategyProfile& profile) const;

  // c1*(a*load + b) + c2*u_e(r_player)
  double edge_cost(std::size_t edge, double load, std::size_t player) const;

  // Per-unit cost of `path` for `player` when the edge loads are `loads`.
  double path_cost(const EdgeLoads& loads, std::size_t player, const Path& path) const;

  // Per-unit cost the player would pay after moving from its current path to
  // `target`, other players fixed.
  double deviation_cost(const EdgeLoads& loads, std::size_t player, const Path& current,
                        const Path& target) const;

  double social_cost(const StrategyProfile& profile, const EdgeLoads& loads) const;
  double potential(const StrategyProfile& profile, const EdgeLoads& loads) const;

 private:
  const GameInstance* instance_;
  std::vector<double> demand_;
  // price_term_[player * edges + e] = c2_e * u_e(r_player)
  std::vector<double> price_term_;
};

EdgeLoads edge_loads(const GameInstance& instance, const StrategyProfile& profile);

double unit_path_cost(const GameInstance& instance, const EdgeLoads& loads,
                      std::size_t player, const Path& path);

// Sum over edges of c1*c(f_e)*f_e plus the priced demand on every used edge.
double social_cost(const GameInstance& instance, const StrategyProfile& profile);

// Phi = sum_e [ c1*(c(f_e) f_e + sum_{i on e} c(r_i) r_i) + 2*c2*sum_{i on e} u(r_i) r_i ].
// A unilateral move of player i changes Phi by exactly 2 r_i times the change
// in that player's per-unit cost.
double potential(const GameInstance& instance, const StrategyProfile& profile);

struct Deviation {
  std::size_t player = 0;
  std::size_t path = 0;
  double current_cost = 0.0;
  double deviation_cost = 0.0;

  double improvement() const { return current_cost - deviation_cost; }
};

struct EquilibriumReport {
  bool is_equilibrium = true;
  std::vector<double> player_costs;
  double social_cost = 0.0;
  double potential = 0.0;
  // First strictly improving deviation in (player, path) order; set iff the
  // profile is not an equilibrium.
  std::optional<Deviation> witness;
};

// Ties and improvements of at most `epsilon` do not break an equilibrium.
EquilibriumReport is_equilibrium(const GameInstance& instance, const StrategyProfile& profile,
                                 double epsilon = kDefaultImproveEpsilon);
EquilibriumReport is_equilibrium(const CostModel& model, const StrategyProfile& profile,
                                 double epsilon = kDefaultImproveEpsilon);

struct BestResponse {
  std::size_t path = 0;
  double cost = 0.0;
};

// Cheapest path for `player` at the deviated flow. The current path is kept
// unless some alternative beats it by more than `epsilon`; among
// alternatives, the lowest index wins ties.
BestResponse best_response(const CostModel& model, const StrategyProfile& profile,
                           const EdgeLoads& loads, std::size_t player,
                           double epsilon = kDefaultImproveEpsilon);
BestResponse best_response(const GameInstance& instance, const StrategyProfile& profile,
                           std::size_t player, double epsilon = kDefaultImproveEpsilon);

struct DynamicsConfig {
  std::size_t max_moves = 100'000;
  double epsilon = kDefaultImproveEpsilon;
};

struct Move {
  std::size_t player = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  double cost_before = 0.0;
  double cost_after = 0.0;
};

struct DynamicsResult {
  StrategyProfile final_profile;
  // Maintained incrementally across moves.
  EdgeLoads final_loads;
  std::vector<Move> moves;
  // Potential of the initial profile followed by its value after each move.
  std::vector<double> potential_trace;
  bool converged = false;
};

// Round-robin best response: players take turns in index order and move only
// on an improvement larger than epsilon. Stops after a full pass without a
// move (converged) or after max_moves moves (not converged).
DynamicsResult run_best_response_dynamics(const GameInstance& instance,
                                          const StrategyProfile& initial,
                                          const DynamicsConfig& config = {});

}  // namespace atomroute
