#include "atomroute/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "atomroute/error.hpp"

namespace atomroute {
namespace {

bool contains(const Path& path, std::size_t edge) {
  return std::find(path.begin(), path.end(), edge) != path.end();
}

}  // namespace

CostModel::CostModel(const GameInstance& instance) : instance_(&instance) {
  if (!instance.has_paths()) {
    throw ScenarioError("instance has no path lists; call with_paths() first");
  }
  const std::size_t edges = instance.edges.size();
  demand_.reserve(instance.player_count());
  price_term_.resize(instance.player_count() * edges, 0.0);
  for (std::size_t i = 0; i < instance.player_count(); ++i) {
    const double r = instance.commodities[i].demand;
    demand_.push_back(r);
    for (std::size_t e = 0; e < edges; ++e) {
      const EdgeSpec& spec = instance.edges[e];
      if (spec.c2 != 0.0) price_term_[i * edges + e] = spec.c2 * eval_u(spec.price, r);
    }
  }
}

void CostModel::check_profile(const StrategyProfile& profile) const {
  if (profile.choice.size() != player_count()) {
    throw std::invalid_argument("profile size does not match player count");
  }
  for (std::size_t i = 0; i < player_count(); ++i) {
    if (profile.choice[i] >= path_count(i)) {
      throw std::invalid_argument("profile path index out of range");
    }
  }
}

EdgeLoads CostModel::loads(const StrategyProfile& profile) const {
  check_profile(profile);
  EdgeLoads out{std::vector<double>(instance_->edges.size(), 0.0)};
  for (std::size_t i = 0; i < player_count(); ++i) {
    for (std::size_t e : path(i, profile.choice[i])) out.load[e] += demand_[i];
  }
  return out;
}

double CostModel::edge_cost(std::size_t edge, double load, std::size_t player) const {
  const EdgeSpec& spec = instance_->edges[edge];
  return spec.c1 * spec.congestion(load) +
         price_term_[player * instance_->edges.size() + edge];
}

double CostModel::path_cost(const EdgeLoads& loads, std::size_t player,
                            const Path& path) const {
  double cost = 0.0;
  for (std::size_t e : path) cost += edge_cost(e, loads.load[e], player);
  return cost;
}

double CostModel::deviation_cost(const EdgeLoads& loads, std::size_t player,
                                 const Path& current, const Path& target) const {
  double cost = 0.0;
  for (std::size_t e : target) {
    const double load = contains(current, e) ? loads.load[e] : loads.load[e] + demand_[player];
    cost += edge_cost(e, load, player);
  }
  return cost;
}

double CostModel::social_cost(const StrategyProfile& profile, const EdgeLoads& loads) const {
  double congestion = 0.0;
  for (std::size_t e = 0; e < instance_->edges.size(); ++e) {
    const EdgeSpec& spec = instance_->edges[e];
    congestion += spec.c1 * spec.congestion(loads.load[e]) * loads.load[e];
  }
  double priced = 0.0;
  const std::size_t edges = instance_->edges.size();
  for (std::size_t i = 0; i < player_count(); ++i) {
    for (std::size_t e : path(i, profile.choice[i])) {
      priced += price_term_[i * edges + e] * demand_[i];
    }
  }
  return congestion + priced;
}

double CostModel::potential(const StrategyProfile& profile, const EdgeLoads& loads) const {
  double phi = 0.0;
  for (std::size_t e = 0; e < instance_->edges.size(); ++e) {
    const EdgeSpec& spec = instance_->edges[e];
    phi += spec.c1 * spec.congestion(loads.load[e]) * loads.load[e];
  }
  const std::size_t edges = instance_->edges.size();
  for (std::size_t i = 0; i < player_count(); ++i) {
    const double r = demand_[i];
    for (std::size_t e : path(i, profile.choice[i])) {
      const EdgeSpec& spec = instance_->edges[e];
      phi += spec.c1 * spec.congestion(r) * r + 2.0 * price_term_[i * edges + e] * r;
    }
  }
  return phi;
}

EdgeLoads edge_loads(const GameInstance& instance, const StrategyProfile& profile) {
  return CostModel(instance).loads(profile);
}

double unit_path_cost(const GameInstance& instance, const EdgeLoads& loads,
                      std::size_t player, const Path& path) {
  if (player >= instance.player_count()) throw std::invalid_argument("player out of range");
  const double r = instance.commodities[player].demand;
  double cost = 0.0;
  for (std::size_t e : path) {
    const EdgeSpec& spec = instance.edges.at(e);
    cost += spec.c1 * spec.congestion(loads.load.at(e));
    if (spec.c2 != 0.0) cost += spec.c2 * eval_u(spec.price, r);
  }
  return cost;
}

double social_cost(const GameInstance& instance, const StrategyProfile& profile) {
  const CostModel model(instance);
  return model.social_cost(profile, model.loads(profile));
}

double potential(const GameInstance& instance, const StrategyProfile& profile) {
  const CostModel model(instance);
  return model.potential(profile, model.loads(profile));
}

EquilibriumReport is_equilibrium(const CostModel& model, const StrategyProfile& profile,
                                 double epsilon) {
  const EdgeLoads loads = model.loads(profile);
  EquilibriumReport report;
  report.player_costs.reserve(model.player_count());
  for (std::size_t i = 0; i < model.player_count(); ++i) {
    report.player_costs.push_back(model.path_cost(loads, i, model.path(i, profile.choice[i])));
  }
  report.social_cost = model.social_cost(profile, loads);
  report.potential = model.potential(profile, loads);

  for (std::size_t i = 0; i < model.player_count() && !report.witness; ++i) {
    const Path& current = model.path(i, profile.choice[i]);
    for (std::size_t p = 0; p < model.path_count(i); ++p) {
      if (p == profile.choice[i]) continue;
      const double cost = model.deviation_cost(loads, i, current, model.path(i, p));
      if (cost < report.player_costs[i] - epsilon) {
        report.witness = Deviation{i, p, report.player_costs[i], cost};
        break;
      }
    }
  }
  report.is_equilibrium = !report.witness.has_value();
  return report;
}

EquilibriumReport is_equilibrium(const GameInstance& instance, const StrategyProfile& profile,
                                 double epsilon) {
  return is_equilibrium(CostModel(instance), profile, epsilon);
}

BestResponse best_response(const CostModel& model, const StrategyProfile& profile,
                           const EdgeLoads& loads, std::size_t player, double epsilon) {
  const std::size_t chosen = profile.choice.at(player);
  const Path& current = model.path(player, chosen);
  const BestResponse stay{chosen, model.path_cost(loads, player, current)};

  std::optional<BestResponse> best_alt;
  for (std::size_t p = 0; p < model.path_count(player); ++p) {
    if (p == chosen) continue;
    const double cost = model.deviation_cost(loads, player, current, model.path(player, p));
    if (!best_alt || cost < best_alt->cost) best_alt = BestResponse{p, cost};
  }
  if (best_alt && best_alt->cost < stay.cost - epsilon) return *best_alt;
  return stay;
}

BestResponse best_response(const GameInstance& instance, const StrategyProfile& profile,
                           std::size_t player, double epsilon) {
  const CostModel model(instance);
  return best_response(model, profile, model.loads(profile), player, epsilon);
}

DynamicsResult run_best_response_dynamics(const GameInstance& instance,
                                          const StrategyProfile& initial,
                                          const DynamicsConfig& config) {
  const CostModel model(instance);
  DynamicsResult result;
  result.final_profile = initial;
  result.final_loads = model.loads(initial);
  StrategyProfile& profile = result.final_profile;
  EdgeLoads& loads = result.final_loads;
  result.potential_trace.push_back(model.potential(profile, loads));

  const std::size_t players = model.player_count();
  if (players == 0) {
    result.converged = true;
    return result;
  }

  std::size_t quiet = 0;  // consecutive players that did not move
  std::size_t player = 0;
  while (quiet < players) {
    const BestResponse br = best_response(model, profile, loads, player, config.epsilon);
    if (br.path != profile.choice[player]) {
      if (result.moves.size() == config.max_moves) return result;
      const double r = model.demand(player);
      const Path& from = model.path(player, profile.choice[player]);
      const double before = model.path_cost(loads, player, from);
      for (std::size_t e : from) loads.load[e] -= r;
      for (std::size_t e : model.path(player, br.path)) loads.load[e] += r;
      result.moves.push_back({player, profile.choice[player], br.path, before, br.cost});
      profile.choice[player] = br.path;
      result.potential_trace.push_back(model.potential(profile, loads));
      quiet = 0;
    }
    ++quiet;
    player = (player + 1) % players;
  }
  result.converged = true;
  return result;
}

}  // namespace atomroute
