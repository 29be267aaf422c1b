#include "atomroute/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

#include "atomroute/error.hpp"

namespace atomroute {
namespace {

constexpr std::uint64_t kMaxProfiles = std::uint64_t{1} << 63;

void require_paths(const GameInstance& instance) {
  if (!instance.has_paths()) {
    throw ScenarioError("instance has no path lists; call with_paths() first");
  }
}

struct ChunkResult {
  std::vector<ScoredProfile> equilibria;
  ScoredProfile optimum;
  bool has_optimum = false;
};

// Lower social cost first, then lower index.
bool better_optimum(double sc, std::uint64_t index, const ScoredProfile& incumbent) {
  return sc < incumbent.social_cost ||
         (sc == incumbent.social_cost && index < incumbent.index);
}

ChunkResult analyze_range(const CostModel& model, std::uint64_t begin, std::uint64_t end,
                          double epsilon) {
  const GameInstance& instance = model.instance();
  ChunkResult out;
  for (std::uint64_t index = begin; index < end; ++index) {
    const StrategyProfile profile = profile_at(instance, index);
    const double sc = model.social_cost(profile, model.loads(profile));
    if (!out.has_optimum || better_optimum(sc, index, out.optimum)) {
      out.optimum = {profile, index, sc};
      out.has_optimum = true;
    }
    if (satisfies_equilibrium_definition(model, profile, epsilon)) {
      out.equilibria.push_back({profile, index, sc});
    }
  }
  return out;
}

}  // namespace

std::uint64_t profile_count(const GameInstance& instance) {
  require_paths(instance);
  std::uint64_t count = 1;
  for (const auto& list : instance.paths) {
    const std::uint64_t n = list.size();
    if (n == 0) return 0;
    if (count > (kMaxProfiles - 1) / n) {
      throw Error("profile count overflows 2^63");
    }
    count *= n;
  }
  return count;
}

StrategyProfile profile_at(const GameInstance& instance, std::uint64_t index) {
  StrategyProfile profile;
  profile.choice.resize(instance.paths.size());
  for (std::size_t i = instance.paths.size(); i-- > 0;) {
    const std::uint64_t radix = instance.paths[i].size();
    profile.choice[i] = static_cast<std::size_t>(index % radix);
    index /= radix;
  }
  return profile;
}

std::uint64_t profile_index(const GameInstance& instance, const StrategyProfile& profile) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < instance.paths.size(); ++i) {
    index = index * instance.paths[i].size() + profile.choice.at(i);
  }
  return index;
}

bool satisfies_equilibrium_definition(const CostModel& model, const StrategyProfile& profile,
                                      double epsilon) {
  const EdgeLoads loads = model.loads(profile);
  for (std::size_t i = 0; i < model.player_count(); ++i) {
    const double current = model.path_cost(loads, i, model.path(i, profile.choice[i]));
    StrategyProfile deviated = profile;
    for (std::size_t p = 0; p < model.path_count(i); ++p) {
      if (p == profile.choice[i]) continue;
      deviated.choice[i] = p;
      const EdgeLoads deviated_loads = model.loads(deviated);
      if (model.path_cost(deviated_loads, i, model.path(i, p)) < current - epsilon) {
        return false;
      }
    }
  }
  return true;
}

ExhaustiveAnalysis analyze_exhaustively(const GameInstance& instance,
                                        const OracleOptions& options) {
  const std::uint64_t count = profile_count(instance);
  if (count > options.cap) {
    throw CapExceeded("profile count " + std::to_string(count) + " exceeds cap " +
                          std::to_string(options.cap),
                      count, options.cap);
  }
  const CostModel model(instance);

  const std::uint64_t workers =
      std::clamp<std::uint64_t>(options.workers, 1, std::max<std::uint64_t>(count, 1));
  std::vector<ChunkResult> chunks(workers);
  auto bounds = [&](std::uint64_t w) { return count * w / workers; };
  if (workers == 1) {
    chunks[0] = analyze_range(model, 0, count, options.epsilon);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        chunks[w] = analyze_range(model, bounds(w), bounds(w + 1), options.epsilon);
      });
    }
  }

  ExhaustiveAnalysis analysis;
  analysis.profile_count = count;
  bool has_optimum = false;
  for (auto& chunk : chunks) {
    if (chunk.has_optimum &&
        (!has_optimum || better_optimum(chunk.optimum.social_cost, chunk.optimum.index,
                                        analysis.optimum))) {
      analysis.optimum = chunk.optimum;
      has_optimum = true;
    }
    for (auto& eq : chunk.equilibria) analysis.equilibria.push_back(std::move(eq));
  }
  for (const auto& eq : analysis.equilibria) {
    if (&eq == &analysis.equilibria.front() ||
        eq.social_cost > analysis.worst_equilibrium.social_cost) {
      analysis.worst_equilibrium = eq;
    }
  }
  return analysis;
}

std::vector<StrategyProfile> find_all_equilibria(const GameInstance& instance,
                                                 const OracleOptions& options) {
  auto analysis = analyze_exhaustively(instance, options);
  std::vector<StrategyProfile> out;
  out.reserve(analysis.equilibria.size());
  for (auto& eq : analysis.equilibria) out.push_back(std::move(eq.profile));
  return out;
}

ScoredProfile optimal_profile(const GameInstance& instance, const OracleOptions& options) {
  return analyze_exhaustively(instance, options).optimum;
}

PoAReport price_of_anarchy(const ExhaustiveAnalysis& analysis) {
  if (analysis.equilibria.empty()) {
    throw NoEquilibrium("exhaustive search found no pure equilibrium among " +
                        std::to_string(analysis.profile_count) + " profiles");
  }
  PoAReport report;
  report.optimal_profile = analysis.optimum.profile;
  report.optimal_social_cost = analysis.optimum.social_cost;
  report.worst_equilibrium_profile = analysis.worst_equilibrium.profile;
  report.worst_equilibrium_social_cost = analysis.worst_equilibrium.social_cost;
  report.equilibrium_count = analysis.equilibria.size();
  report.profile_count = analysis.profile_count;
  if (report.optimal_social_cost > 0.0) {
    report.poa = report.worst_equilibrium_social_cost / report.optimal_social_cost;
  } else {
    report.poa = report.worst_equilibrium_social_cost > 0.0
                     ? std::numeric_limits<double>::infinity()
                     : 1.0;
  }
  report.within_bound = report.poa <= report.bound + kPoABoundSlack;
  return report;
}

PoAReport price_of_anarchy(const GameInstance& instance, const OracleOptions& options) {
  return price_of_anarchy(analyze_exhaustively(instance, options));
}

}  // namespace atomroute
