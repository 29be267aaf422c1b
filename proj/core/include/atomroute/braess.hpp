#pragma once

// Braess networks and edge-addition experiments.
//
// Topology (source s, sink t):
//
//        v
//      /   \        s->v, w->t : congestion a=1, b=0 (priced in the
//     s  |  t                    priced construction)
//      \ v /        v->t, s->w : constant cost 1
//        w          v->w       : zero-cost bridge, second instance only
//
// n players each send 1/n units from s to t.

#include <cstddef>
#include <optional>
#include <string>

#include "atomroute/model.hpp"
#include "atomroute/oracle.hpp"

namespace atomroute {

struct BraessPair {
  GameInstance before;  // without the v->w bridge
  GameInstance after;   // with the bridge
};

// Throws std::invalid_argument unless n is even and positive.
BraessPair build_classic_braess(std::size_t n);

// Variable edges cost c1*f + c2*u(1/n). With c2 == 0 the price is dropped,
// which makes the pair identical to build_classic_braess(n). Throws
// std::invalid_argument on odd n or unnormalized mixing coefficients.
BraessPair build_priced_braess(std::size_t n, const PriceSpec& price, double c1 = 0.5,
                               double c2 = 0.5);

// Edge-addition severity on the Braess network:
//   rho = 4 (c1 + c2 u) / (2 + c1 + 2 c2 u)
// which is (4 + 4u) / (5 + 2u) at c1 = c2 = 1/2. Throws std::invalid_argument
// for u outside [0,1] or unnormalized coefficients.
double rho_formula(double u, double c1, double c2);

enum class ExperimentMethod { oracle, dynamics };

struct ExperimentOptions {
  ExperimentMethod method = ExperimentMethod::oracle;
  OracleOptions oracle;
  DynamicsConfig dynamics;
};

struct SideReport {
  // Highest per-unit cost any player pays at the reported equilibrium.
  double unit_cost = 0.0;
  double social_cost = 0.0;
  StrategyProfile profile;
  // Oracle only; 0 when the dynamics method was used.
  std::uint64_t equilibrium_count = 0;
};

struct BraessReport {
  SideReport before;
  SideReport after;
  double rho = 0.0;  // after.unit_cost / before.unit_cost
  std::optional<double> formula_rho;
  std::size_t n_players = 0;
  std::optional<PriceSpec> price;  // set for builder-produced pairs
  ExperimentMethod method = ExperimentMethod::oracle;
};

// Equilibrium per-unit cost before and after the edge addition. With the
// oracle method the worst equilibrium by social cost is used; with dynamics,
// the equilibrium reached by best response from the lowest-index profile.
// Throws std::invalid_argument when the two instances do not share
// commodities, plus the errors of the chosen method.
BraessReport edge_addition_experiment(const GameInstance& before, const GameInstance& after,
                                      const ExperimentOptions& options = {});

std::string_view to_string(ExperimentMethod method);

}  // namespace atomroute
