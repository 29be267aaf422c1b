#include "atomroute/report.hpp"

#include <cmath>
#include <limits>

#include "atomroute/error.hpp"

namespace atomroute {
namespace {

// JSON has no infinity; a PoA over a zero-cost optimum is written as null.
ordered_json real(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

double real_from(const ordered_json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

ordered_json side_to_json(const SideReport& side) {
  return {{"unit_cost", side.unit_cost},
          {"social_cost", side.social_cost},
          {"profile", to_json(side.profile)},
          {"equilibrium_count", side.equilibrium_count}};
}

SideReport side_from_json(const ordered_json& j) {
  return {j.at("unit_cost").get<double>(), j.at("social_cost").get<double>(),
          profile_from_json(j.at("profile")), j.at("equilibrium_count").get<std::uint64_t>()};
}

}  // namespace

ordered_json to_json(const StrategyProfile& profile) { return profile.choice; }

StrategyProfile profile_from_json(const ordered_json& j) {
  return {j.get<std::vector<std::size_t>>()};
}

ordered_json to_json(const PriceSpec& price) {
  ordered_json params = ordered_json::object();
  if (price.family == PriceFamily::saturating) params["beta"] = price.beta;
  return {{"fn", to_string(price.family)}, {"params", params}};
}

PriceSpec price_from_json(const ordered_json& j) {
  const auto family = parse_price_family(j.at("fn").get<std::string>());
  if (!family) throw ScenarioError("unknown price function");
  PriceSpec spec{*family, 0.0};
  if (*family == PriceFamily::saturating) spec.beta = j.at("params").at("beta").get<double>();
  return spec;
}

ordered_json to_json(const ValidationReport& report) {
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"subject", v.subject}, {"message", v.message}});
  }
  return {{"valid", report.ok()}, {"violations", violations}};
}

ValidationReport validation_report_from_json(const ordered_json& j) {
  ValidationReport report;
  for (const auto& v : j.at("violations")) {
    report.violations.push_back(
        {v.at("subject").get<std::string>(), v.at("message").get<std::string>()});
  }
  return report;
}

ordered_json to_json(const EquilibriumReport& report) {
  ordered_json out{{"is_equilibrium", report.is_equilibrium},
                   {"player_costs", report.player_costs},
                   {"social_cost", report.social_cost},
                   {"potential", report.potential},
                   {"witness", nullptr}};
  if (report.witness) {
    out["witness"] = {{"player", report.witness->player},
                      {"path", report.witness->path},
                      {"current_cost", report.witness->current_cost},
                      {"deviation_cost", report.witness->deviation_cost}};
  }
  return out;
}

EquilibriumReport equilibrium_report_from_json(const ordered_json& j) {
  EquilibriumReport report;
  report.is_equilibrium = j.at("is_equilibrium").get<bool>();
  report.player_costs = j.at("player_costs").get<std::vector<double>>();
  report.social_cost = j.at("social_cost").get<double>();
  report.potential = j.at("potential").get<double>();
  if (const auto& w = j.at("witness"); !w.is_null()) {
    report.witness = Deviation{w.at("player").get<std::size_t>(), w.at("path").get<std::size_t>(),
                               w.at("current_cost").get<double>(),
                               w.at("deviation_cost").get<double>()};
  }
  return report;
}

ordered_json to_json(const DynamicsResult& result) {
  ordered_json moves = ordered_json::array();
  for (const auto& m : result.moves) {
    moves.push_back({{"player", m.player},
                     {"from", m.from},
                     {"to", m.to},
                     {"cost_before", m.cost_before},
                     {"cost_after", m.cost_after}});
  }
  return {{"converged", result.converged},
          {"final_profile", to_json(result.final_profile)},
          {"final_loads", result.final_loads.load},
          {"moves", moves},
          {"potential_trace", result.potential_trace}};
}

DynamicsResult dynamics_result_from_json(const ordered_json& j) {
  DynamicsResult result;
  result.converged = j.at("converged").get<bool>();
  result.final_profile = profile_from_json(j.at("final_profile"));
  result.final_loads.load = j.at("final_loads").get<std::vector<double>>();
  for (const auto& m : j.at("moves")) {
    result.moves.push_back({m.at("player").get<std::size_t>(), m.at("from").get<std::size_t>(),
                            m.at("to").get<std::size_t>(), m.at("cost_before").get<double>(),
                            m.at("cost_after").get<double>()});
  }
  result.potential_trace = j.at("potential_trace").get<std::vector<double>>();
  return result;
}

ordered_json to_json(const PoAReport& report) {
  return {{"optimal_profile", to_json(report.optimal_profile)},
          {"optimal_social_cost", report.optimal_social_cost},
          {"worst_equilibrium_profile", to_json(report.worst_equilibrium_profile)},
          {"worst_equilibrium_social_cost", report.worst_equilibrium_social_cost},
          {"equilibrium_count", report.equilibrium_count},
          {"profile_count", report.profile_count},
          {"poa", real(report.poa)},
          {"bound", report.bound},
          {"within_bound", report.within_bound}};
}

PoAReport poa_report_from_json(const ordered_json& j) {
  PoAReport report;
  report.optimal_profile = profile_from_json(j.at("optimal_profile"));
  report.optimal_social_cost = j.at("optimal_social_cost").get<double>();
  report.worst_equilibrium_profile = profile_from_json(j.at("worst_equilibrium_profile"));
  report.worst_equilibrium_social_cost = j.at("worst_equilibrium_social_cost").get<double>();
  report.equilibrium_count = j.at("equilibrium_count").get<std::uint64_t>();
  report.profile_count = j.at("profile_count").get<std::uint64_t>();
  report.poa = real_from(j.at("poa"));
  report.bound = j.at("bound").get<double>();
  report.within_bound = j.at("within_bound").get<bool>();
  return report;
}

ordered_json to_json(const BraessReport& report) {
  return {{"before", side_to_json(report.before)},
          {"after", side_to_json(report.after)},
          {"rho", report.rho},
          {"formula_rho", report.formula_rho ? ordered_json(*report.formula_rho) : nullptr},
          {"n_players", report.n_players},
          {"price", report.price ? to_json(*report.price) : nullptr},
          {"method", to_string(report.method)}};
}

BraessReport braess_report_from_json(const ordered_json& j) {
  BraessReport report;
  report.before = side_from_json(j.at("before"));
  report.after = side_from_json(j.at("after"));
  report.rho = j.at("rho").get<double>();
  if (!j.at("formula_rho").is_null()) report.formula_rho = j.at("formula_rho").get<double>();
  report.n_players = j.at("n_players").get<std::size_t>();
  if (!j.at("price").is_null()) report.price = price_from_json(j.at("price"));
  const auto method = j.at("method").get<std::string>();
  if (method == "oracle") {
    report.method = ExperimentMethod::oracle;
  } else if (method == "dynamics") {
    report.method = ExperimentMethod::dynamics;
  } else {
    throw ScenarioError("unknown experiment method \"" + method + "\"");
  }
  return report;
}

}  // namespace atomroute
