#pragma once

// Game instances for atomic selfish routing: a directed multigraph with
// affine congestion and an ISP price on every edge, and a list of players
// (commodities), each routing its whole demand on a single path.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atomroute/pricing.hpp"

namespace atomroute {

using NodeId = std::string;

// Per-unit cost of edge e for a player with demand r on total load x:
//   c1 * (a x + b) + c2 * u(r)
struct EdgeSpec {
  std::string id;
  NodeId from;
  NodeId to;
  double a = 0.0;  // congestion slope
  double b = 0.0;  // congestion intercept
  PriceSpec price;
  double c1 = 1.0;
  double c2 = 0.0;

  double congestion(double load) const { return a * load + b; }

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct Commodity {
  std::string id;
  NodeId source;
  NodeId sink;
  double demand = 0.0;

  friend bool operator==(const Commodity&, const Commodity&) = default;
};

// Edge indices into GameInstance::edges, in traversal order.
using Path = std::vector<std::size_t>;

// Marks instances produced by the Braess builders so experiment reports can
// attach the closed-form prediction. Never read from or written to scenario
// files.
struct BraessConstruction {
  std::size_t players = 0;
  PriceSpec price;
  double c1 = 1.0;
  double c2 = 0.0;
  bool with_bridge = false;

  friend bool operator==(const BraessConstruction&, const BraessConstruction&) = default;
};

struct GameInstance {
  std::vector<NodeId> nodes;
  std::vector<EdgeSpec> edges;
  std::vector<Commodity> commodities;
  // paths[i] is the strategy set of player i; empty until populated by
  // with_paths().
  std::vector<std::vector<Path>> paths;
  std::optional<BraessConstruction> construction;

  std::size_t player_count() const { return commodities.size(); }
  bool has_paths() const { return paths.size() == commodities.size(); }

  std::optional<std::size_t> node_index(std::string_view id) const;
  std::optional<std::size_t> edge_index(std::string_view id) const;
};

// Compares the network and players only; path lists and construction tags
// are derived data.
bool same_network(const GameInstance& lhs, const GameInstance& rhs);

inline constexpr std::size_t kDefaultPathCap = 10'000;

// All simple source->sink paths of commodity `player`, sorted
// lexicographically by edge-id sequence. Throws CapExceeded when more than
// `cap` paths exist and ScenarioError when there are none or an endpoint is
// unknown.
std::vector<Path> enumerate_paths(const GameInstance& instance, std::size_t player,
                                  std::size_t cap = kDefaultPathCap);

// Copy of `instance` with every player's path list populated.
GameInstance with_paths(GameInstance instance, std::size_t cap = kDefaultPathCap);

// Node sequence visited by a path, starting at the first edge's tail.
std::vector<NodeId> path_nodes(const GameInstance& instance, const Path& path);

// Edge ids joined with "," for reports.
std::string path_label(const GameInstance& instance, const Path& path);

struct Violation {
  std::string subject;  // id of the offending node, edge or commodity
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Lists every broken invariant. Never throws for a malformed instance.
ValidationReport validate_instance(const GameInstance& instance);

// Tolerance on c1 + c2 = 1.
inline constexpr double kMixingTolerance = 1e-9;

}  // namespace atomroute
