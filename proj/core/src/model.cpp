#include "atomroute/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "atomroute/error.hpp"

namespace atomroute {
namespace {

struct Adjacency {
  std::unordered_map<std::string_view, std::size_t> node_of;
  std::vector<std::vector<std::size_t>> out_edges;  // by node index
  std::vector<std::size_t> head;                    // by edge index
};

Adjacency build_adjacency(const GameInstance& instance) {
  Adjacency adj;
  for (std::size_t v = 0; v < instance.nodes.size(); ++v) {
    adj.node_of.emplace(instance.nodes[v], v);
  }
  adj.out_edges.resize(instance.nodes.size());
  adj.head.resize(instance.edges.size(), 0);
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    const auto& edge = instance.edges[e];
    auto from = adj.node_of.find(edge.from);
    auto to = adj.node_of.find(edge.to);
    if (from == adj.node_of.end() || to == adj.node_of.end()) {
      throw ScenarioError("edge " + edge.id + " references an unknown node");
    }
    adj.out_edges[from->second].push_back(e);
    adj.head[e] = to->second;
  }
  return adj;
}

class SimplePathSearch {
 public:
  SimplePathSearch(const Adjacency& adj, std::size_t sink, std::size_t cap)
      : adj_(adj), sink_(sink), cap_(cap), on_path_(adj.out_edges.size(), false) {}

  std::vector<Path> run(std::size_t source) {
    visit(source);
    return std::move(found_);
  }

 private:
  void visit(std::size_t node) {
    if (node == sink_) {
      if (found_.size() == cap_) {
        throw CapExceeded("path count exceeds cap", cap_ + 1, cap_);
      }
      found_.push_back(current_);
      return;
    }
    on_path_[node] = true;
    for (std::size_t e : adj_.out_edges[node]) {
      const std::size_t next = adj_.head[e];
      if (on_path_[next]) continue;
      current_.push_back(e);
      visit(next);
      current_.pop_back();
    }
    on_path_[node] = false;
  }

  const Adjacency& adj_;
  std::size_t sink_;
  std::size_t cap_;
  std::vector<bool> on_path_;
  Path current_;
  std::vector<Path> found_;
};

bool reachable(const Adjacency& adj, std::size_t from, std::size_t to) {
  std::vector<bool> seen(adj.out_edges.size(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (std::size_t e : adj.out_edges[v]) {
      if (!seen[adj.head[e]]) {
        seen[adj.head[e]] = true;
        stack.push_back(adj.head[e]);
      }
    }
  }
  return false;
}

bool id_sequence_less(const GameInstance& instance, const Path& lhs, const Path& rhs) {
  return std::lexicographical_compare(
      lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
      [&](std::size_t x, std::size_t y) { return instance.edges[x].id < instance.edges[y].id; });
}

}  // namespace

std::optional<std::size_t> GameInstance::node_index(std::string_view id) const {
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (nodes[v] == id) return v;
  }
  return std::nullopt;
}

std::optional<std::size_t> GameInstance::edge_index(std::string_view id) const {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].id == id) return e;
  }
  return std::nullopt;
}

bool same_network(const GameInstance& lhs, const GameInstance& rhs) {
  return lhs.nodes == rhs.nodes && lhs.edges == rhs.edges &&
         lhs.commodities == rhs.commodities;
}

std::vector<Path> enumerate_paths(const GameInstance& instance, std::size_t player,
                                  std::size_t cap) {
  if (player >= instance.commodities.size()) {
    throw ScenarioError("commodity index out of range");
  }
  const Commodity& c = instance.commodities[player];
  const Adjacency adj = build_adjacency(instance);
  auto source = adj.node_of.find(c.source);
  auto sink = adj.node_of.find(c.sink);
  if (source == adj.node_of.end() || sink == adj.node_of.end()) {
    throw ScenarioError("commodity " + c.id + " references an unknown node");
  }
  if (source->second == sink->second) {
    throw ScenarioError("commodity " + c.id + " has source equal to sink");
  }

  std::vector<Path> paths;
  try {
    paths = SimplePathSearch(adj, sink->second, cap).run(source->second);
  } catch (const CapExceeded& e) {
    throw CapExceeded("commodity " + c.id + ": more than " + std::to_string(cap) +
                          " simple paths",
                      e.count(), e.cap());
  }
  if (paths.empty()) {
    throw ScenarioError("commodity " + c.id + ": no s-t path");
  }
  std::sort(paths.begin(), paths.end(), [&](const Path& x, const Path& y) {
    return id_sequence_less(instance, x, y);
  });
  return paths;
}

GameInstance with_paths(GameInstance instance, std::size_t cap) {
  instance.paths.clear();
  instance.paths.reserve(instance.commodities.size());
  for (std::size_t i = 0; i < instance.commodities.size(); ++i) {
    instance.paths.push_back(enumerate_paths(instance, i, cap));
  }
  return instance;
}

std::vector<NodeId> path_nodes(const GameInstance& instance, const Path& path) {
  std::vector<NodeId> out;
  if (path.empty()) return out;
  out.push_back(instance.edges[path.front()].from);
  for (std::size_t e : path) out.push_back(instance.edges[e].to);
  return out;
}

std::string path_label(const GameInstance& instance, const Path& path) {
  std::string out;
  for (std::size_t e : path) {
    if (!out.empty()) out += ',';
    out += instance.edges[e].id;
  }
  return out;
}

ValidationReport validate_instance(const GameInstance& instance) {
  ValidationReport report;
  auto add = [&](const std::string& subject, std::string message) {
    report.violations.push_back({subject, std::move(message)});
  };

  std::set<std::string_view> node_ids;
  for (const auto& v : instance.nodes) {
    if (v.empty()) add(v, "empty node id");
    if (!node_ids.insert(v).second) add(v, "duplicate node id");
  }

  std::set<std::string_view> edge_ids;
  bool endpoints_ok = true;
  for (const auto& e : instance.edges) {
    if (e.id.empty()) add(e.id, "empty edge id");
    if (!edge_ids.insert(e.id).second) add(e.id, "duplicate edge id");
    const bool from_known = node_ids.contains(e.from);
    const bool to_known = node_ids.contains(e.to);
    if (!from_known || !to_known) {
      add(e.id, "unknown node reference");
      endpoints_ok = false;
    }
    if (e.from == e.to) add(e.id, "self-loop");
    if (!std::isfinite(e.a) || !std::isfinite(e.b) || !std::isfinite(e.c1) ||
        !std::isfinite(e.c2)) {
      add(e.id, "non-finite coefficient");
      continue;
    }
    if (e.a < 0.0) add(e.id, "negative congestion slope");
    if (e.b < 0.0) add(e.id, "negative congestion intercept");
    if (e.c1 < 0.0 || e.c1 > 1.0 || e.c2 < 0.0 || e.c2 > 1.0) {
      add(e.id, "mixing coefficient outside [0,1]");
    }
    if (std::abs(e.c1 + e.c2 - 1.0) > kMixingTolerance) {
      add(e.id, "mixing coefficients not normalized");
    }
    if (auto bad = check_price_params(e.price)) add(e.id, *bad);
  }

  std::set<std::string_view> commodity_ids;
  std::vector<bool> demand_ok(instance.commodities.size(), true);
  for (std::size_t i = 0; i < instance.commodities.size(); ++i) {
    const auto& c = instance.commodities[i];
    if (c.id.empty()) add(c.id, "empty commodity id");
    if (!commodity_ids.insert(c.id).second) add(c.id, "duplicate commodity id");
    if (!(std::isfinite(c.demand) && c.demand > 0.0)) {
      add(c.id, "nonpositive demand");
      demand_ok[i] = false;
    }
    const bool known = node_ids.contains(c.source) && node_ids.contains(c.sink);
    if (!known) add(c.id, "unknown node reference");
    if (c.source == c.sink) add(c.id, "source equals sink");
  }

  // Demands are the arguments of the edge price functions.
  for (const auto& e : instance.edges) {
    if (check_price_params(e.price)) continue;
    for (std::size_t i = 0; i < instance.commodities.size(); ++i) {
      const auto& c = instance.commodities[i];
      if (demand_ok[i] && c.demand > domain_max(e.price)) {
        add(e.id, "demand of commodity " + c.id + " outside price domain of " +
                      describe(e.price));
      }
    }
  }

  if (!endpoints_ok || node_ids.size() != instance.nodes.size()) return report;
  const Adjacency adj = build_adjacency(instance);
  for (const auto& c : instance.commodities) {
    auto s = adj.node_of.find(c.source);
    auto t = adj.node_of.find(c.sink);
    if (s == adj.node_of.end() || t == adj.node_of.end() || s->second == t->second) continue;
    if (!reachable(adj, s->second, t->second)) add(c.id, "no s-t path");
  }

  if (!instance.paths.empty()) {
    if (!instance.has_paths()) {
      add("", "path lists do not match commodity count");
      return report;
    }
    for (std::size_t i = 0; i < instance.commodities.size(); ++i) {
      const auto& c = instance.commodities[i];
      const auto& list = instance.paths[i];
      if (list.empty()) add(c.id, "empty path list");
      for (const Path& p : list) {
        bool in_range = !p.empty();
        for (std::size_t e : p) in_range = in_range && e < instance.edges.size();
        if (!in_range) {
          add(c.id, "path references an unknown edge");
          continue;
        }
        const auto visited = path_nodes(instance, p);
        bool chained = true;
        for (std::size_t k = 1; k < p.size(); ++k) {
          chained = chained && instance.edges[p[k - 1]].to == instance.edges[p[k]].from;
        }
        std::set<std::string_view> distinct(visited.begin(), visited.end());
        if (!chained || visited.front() != c.source || visited.back() != c.sink ||
            distinct.size() != visited.size()) {
          add(c.id, "path " + path_label(instance, p) + " is not a simple s-t path");
        }
      }
      for (std::size_t k = 1; k < list.size(); ++k) {
        if (!id_sequence_less(instance, list[k - 1], list[k])) {
          add(c.id, "path list not sorted by edge-id sequence");
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace atomroute
