#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "atomroute/braess.hpp"
#include "atomroute/engine.hpp"
#include "atomroute/error.hpp"
#include "atomroute/model.hpp"
#include "atomroute/oracle.hpp"
#include "atomroute/pricing.hpp"
#include "atomroute/report.hpp"
#include "atomroute/scenario.hpp"

namespace atomroute::cli {
namespace {

enum class Format { table, json, csv };

struct RunConfig {
  Format format = Format::table;
  double epsilon = kDefaultImproveEpsilon;
  std::size_t max_moves = 100'000;
  std::uint64_t cap = kDefaultProfileCap;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string emit_scenario;
};

// Raised inside a command to end it with a specific exit code.
struct CommandExit {
  int code;
  std::string message;
};

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string format_scalar(const ordered_json& j) {
  if (j.is_null()) return "-";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  if (j.is_number()) return format_number(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool all_scalars(const ordered_json& arr) {
  return std::all_of(arr.begin(), arr.end(),
                     [](const ordered_json& x) { return x.is_primitive(); });
}

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  auto join = [&](const std::string& key) { return prefix.empty() ? key : prefix + "." + key; };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, join(key), rows);
  } else if (j.is_array() && all_scalars(j)) {
    std::string cell;
    for (const auto& x : j) {
      if (!cell.empty()) cell += ' ';
      cell += format_scalar(x);
    }
    rows.emplace_back(prefix, cell);
  } else if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], join(std::to_string(k)), rows);
  } else {
    rows.emplace_back(prefix, format_scalar(j));
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void render(const ordered_json& doc, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  if (format == Format::csv) {
    out << "field,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [k, v] : rows) {
    out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
}

GameInstance load_document(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception& e) {
    throw CommandExit{kUsageError, e.what()};
  }
  try {
    return parse_scenario_document(text);
  } catch (const ScenarioError& e) {
    throw CommandExit{kUsageError, path + ": " + e.what()};
  }
}

void print_violations(const ValidationReport& report, std::ostream& err) {
  for (const auto& v : report.violations) err << "  " << v.subject << ": " << v.message << '\n';
}

// Parsed, validated and with path lists.
GameInstance load_instance(const std::string& path, std::ostream& err) {
  GameInstance instance = load_document(path);
  const ValidationReport report = validate_instance(instance);
  if (!report.ok()) {
    err << path << ": invalid scenario\n";
    print_violations(report, err);
    throw CommandExit{kDomainFailure, ""};
  }
  return with_paths(std::move(instance));
}

void emit(const RunConfig& config, const GameInstance& instance) {
  if (config.emit_scenario.empty()) return;
  try {
    write_text_file(config.emit_scenario, serialize_scenario(instance));
  } catch (const std::exception& e) {
    throw CommandExit{kUsageError, e.what()};
  }
}

void emit_pair(const RunConfig& config, const BraessPair& pair) {
  if (config.emit_scenario.empty()) return;
  try {
    write_text_file(config.emit_scenario + "-before.json", serialize_scenario(pair.before));
    write_text_file(config.emit_scenario + "-after.json", serialize_scenario(pair.after));
  } catch (const std::exception& e) {
    throw CommandExit{kUsageError, e.what()};
  }
}

ordered_json path_labels(const GameInstance& instance, const StrategyProfile& profile) {
  ordered_json labels = ordered_json::array();
  for (std::size_t i = 0; i < profile.choice.size(); ++i) {
    labels.push_back(path_label(instance, instance.paths[i][profile.choice[i]]));
  }
  return labels;
}

OracleOptions oracle_options(const RunConfig& config) {
  return {config.cap, config.epsilon, config.workers};
}

int cmd_validate(const std::string& path, const RunConfig& config, std::ostream& out) {
  const GameInstance instance = load_document(path);
  ValidationReport report = validate_instance(instance);
  if (report.ok()) {
    for (std::size_t i = 0; i < instance.player_count(); ++i) {
      try {
        enumerate_paths(instance, i);
      } catch (const CapExceeded& e) {
        report.violations.push_back({instance.commodities[i].id, e.what()});
      }
    }
  }
  render(to_json(report), config.format, out);
  if (report.ok()) emit(config, instance);
  return report.ok() ? kOk : kDomainFailure;
}

int cmd_equilibrate(const std::string& path, const RunConfig& config, std::ostream& out,
                    std::ostream& err) {
  const GameInstance instance = load_instance(path, err);
  emit(config, instance);

  std::mt19937_64 rng(config.seed);
  StrategyProfile initial;
  for (const auto& list : instance.paths) initial.choice.push_back(rng() % list.size());

  const DynamicsResult run =
      run_best_response_dynamics(instance, initial, {config.max_moves, config.epsilon});
  const EquilibriumReport check = is_equilibrium(instance, run.final_profile, config.epsilon);

  ordered_json doc;
  doc["seed"] = config.seed;
  doc["initial_profile"] = to_json(initial);
  doc["final_paths"] = path_labels(instance, run.final_profile);
  doc["move_count"] = run.moves.size();
  doc["potential_trace_length"] = run.potential_trace.size();
  doc["dynamics"] = to_json(run);
  doc["equilibrium"] = to_json(check);
  render(doc, config.format, out);
  return run.converged ? kOk : kDomainFailure;
}

ordered_json poa_document(const GameInstance& instance, const PoAReport& report) {
  ordered_json doc = to_json(report);
  doc["optimal_paths"] = path_labels(instance, report.optimal_profile);
  doc["worst_equilibrium_paths"] = path_labels(instance, report.worst_equilibrium_profile);
  return doc;
}

int cmd_enumerate(const std::string& path, const RunConfig& config, bool list_equilibria,
                  std::ostream& out, std::ostream& err) {
  const GameInstance instance = load_instance(path, err);
  emit(config, instance);
  const ExhaustiveAnalysis analysis = analyze_exhaustively(instance, oracle_options(config));
  const PoAReport report = price_of_anarchy(analysis);

  ordered_json doc;
  if (list_equilibria) {
    ordered_json eqs = ordered_json::array();
    for (const auto& eq : analysis.equilibria) {
      eqs.push_back({{"index", eq.index},
                     {"profile", to_json(eq.profile)},
                     {"social_cost", eq.social_cost}});
    }
    doc["equilibria"] = eqs;
    doc["poa"] = poa_document(instance, report);
  } else {
    doc = poa_document(instance, report);
  }
  render(doc, config.format, out);
  return report.within_bound ? kOk : kDomainFailure;
}

int run_experiment(const GameInstance& before, const GameInstance& after,
                   ExperimentMethod method, const RunConfig& config, std::ostream& out) {
  ExperimentOptions options;
  options.method = method;
  options.oracle = oracle_options(config);
  options.dynamics = {config.max_moves, config.epsilon};
  const BraessReport report = edge_addition_experiment(before, after, options);
  render(to_json(report), config.format, out);
  return kOk;
}

PriceSpec price_from_flags(const std::string& name, double beta) {
  auto family = parse_price_family(name);
  if (!family) throw CommandExit{kUsageError, "unknown price function \"" + name + "\""};
  PriceSpec spec{*family, *family == PriceFamily::saturating ? beta : 0.0};
  if (auto bad = check_price_params(spec)) throw CommandExit{kUsageError, *bad};
  return spec;
}

int cmd_price_curves(const std::vector<std::string>& names, std::size_t samples, double x_max,
                     double beta, std::ostream& out) {
  std::vector<PriceSpec> specs;
  for (const auto& name : names) specs.push_back(price_from_flags(name, beta));
  const std::vector<double> grid = linear_grid(0.0, x_max, samples);

  // Evaluate everything before writing so a domain error leaves no partial output.
  std::ostringstream csv;
  csv << 'x';
  for (const auto& s : specs) {
    csv << ',' << to_string(s.family) << "_F," << to_string(s.family) << "_u";
  }
  csv << ",y_eq_x\n";
  for (double x : grid) {
    csv << format_number(x);
    for (const auto& s : specs) {
      csv << ',' << format_number(eval_F(s, x)) << ',' << format_number(eval_u(s, x));
    }
    csv << ',' << format_number(x) << '\n';
  }
  out << csv.str();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Atomic selfish routing with bulk-discount edge pricing", "atomroute"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format_name = "table";
  app.add_option("--format", format_name, "Report format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--epsilon", config.epsilon, "Strict-improvement threshold")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-moves", config.max_moves, "Best-response move limit")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap", config.cap, "Maximum profiles for exhaustive search")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for random initial profiles");
  app.add_option("--workers", config.workers, "Threads for exhaustive search")
      ->check(CLI::PositiveNumber);
  app.add_option("--emit-scenario", config.emit_scenario,
                 "Write the instance as a scenario file (builders write PREFIX-before.json "
                 "and PREFIX-after.json)");

  std::string scenario_path;
  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("scenario", scenario_path)->required();
  auto* equilibrate = app.add_subcommand("equilibrate", "Run best-response dynamics");
  equilibrate->add_option("scenario", scenario_path)->required();
  auto* enumerate = app.add_subcommand("enumerate", "List every pure equilibrium");
  enumerate->add_option("scenario", scenario_path)->required();
  auto* poa = app.add_subcommand("poa", "Exhaustive Price of Anarchy");
  poa->add_option("scenario", scenario_path)->required();

  auto* braess = app.add_subcommand("braess", "Edge-addition experiments");
  braess->require_subcommand(1);
  braess->fallthrough();
  std::size_t n = 10;
  std::string price_name = "identity";
  double beta = 1.0;
  double c1 = 0.5;
  double c2 = 0.5;
  std::string method_name = "oracle";
  braess->add_option("--method", method_name, "oracle (worst equilibrium) or dynamics")
      ->check(CLI::IsMember({"oracle", "dynamics"}));
  auto* classic = braess->add_subcommand("classic", "Unpriced Braess network");
  classic->add_option("--n", n, "Even number of players");
  auto* priced = braess->add_subcommand("priced", "Braess network with priced edges");
  priced->add_option("--n", n, "Even number of players");
  priced->add_option("--price", price_name, "zero, identity, sin, log1p or saturating");
  priced->add_option("--beta", beta, "Discount depth of the saturating price");
  priced->add_option("--c1", c1, "Congestion weight");
  priced->add_option("--c2", c2, "Price weight");
  std::string before_path, after_path;
  auto* pair = braess->add_subcommand("pair", "Compare two scenario files");
  pair->add_option("before", before_path)->required();
  pair->add_option("after", after_path)->required();

  std::vector<std::string> families{"sin", "log1p"};
  std::size_t samples = 101;
  double x_max = 1.0;
  double curve_beta = 1.0;
  auto* curves = app.add_subcommand("price-curves", "F(x) and u(x) samples as CSV");
  curves->add_option("--functions", families, "Comma-separated price families")
      ->delimiter(',');
  curves->add_option("--samples", samples, "Grid points, at least 2")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  curves->add_option("--x-max", x_max, "Right end of the grid")->check(CLI::PositiveNumber);
  curves->add_option("--beta", curve_beta, "Discount depth of the saturating price");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  config.format = format_name == "json"  ? Format::json
                  : format_name == "csv" ? Format::csv
                                         : Format::table;
  const ExperimentMethod method =
      method_name == "dynamics" ? ExperimentMethod::dynamics : ExperimentMethod::oracle;

  try {
    if (validate->parsed()) return cmd_validate(scenario_path, config, out);
    if (equilibrate->parsed()) return cmd_equilibrate(scenario_path, config, out, err);
    if (enumerate->parsed()) return cmd_enumerate(scenario_path, config, true, out, err);
    if (poa->parsed()) return cmd_enumerate(scenario_path, config, false, out, err);
    if (curves->parsed()) return cmd_price_curves(families, samples, x_max, curve_beta, out);
    if (classic->parsed() || priced->parsed()) {
      BraessPair built;
      try {
        built = classic->parsed()
                    ? build_classic_braess(n)
                    : build_priced_braess(n, price_from_flags(price_name, beta), c1, c2);
      } catch (const std::invalid_argument& e) {
        throw CommandExit{kUsageError, e.what()};
      }
      emit_pair(config, built);
      return run_experiment(built.before, built.after, method, config, out);
    }
    if (pair->parsed()) {
      GameInstance before = load_instance(before_path, err);
      GameInstance after = load_instance(after_path, err);
      if (before.commodities != after.commodities) {
        throw CommandExit{kUsageError, "pair scenarios must share their commodities"};
      }
      return run_experiment(before, after, method, config, out);
    }
  } catch (const CommandExit& e) {
    if (!e.message.empty()) err << "error: " << e.message << '\n';
    return e.code;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const NoEquilibrium& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace atomroute::cli
