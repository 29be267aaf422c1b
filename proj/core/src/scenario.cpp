#include "atomroute/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "atomroute/error.hpp"

namespace atomroute {
namespace {

using nlohmann::json;

void require_object(const json& j, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ScenarioError(std::string(where) + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) {
      throw ScenarioError(std::string(where) + ": unknown field \"" + key + "\"");
    }
  }
}

const json& field(const json& j, std::string_view where, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ScenarioError(std::string(where) + ": missing field \"" + name + "\"");
  }
  return *it;
}

std::string string_field(const json& j, std::string_view where, const char* name) {
  const json& v = field(j, where, name);
  if (!v.is_string()) {
    throw ScenarioError(std::string(where) + ": field \"" + name + "\" must be a string");
  }
  return v.get<std::string>();
}

double number_field(const json& j, std::string_view where, const char* name) {
  const json& v = field(j, where, name);
  if (!v.is_number()) {
    throw ScenarioError(std::string(where) + ": field \"" + name + "\" must be a number");
  }
  return v.get<double>();
}

const json& array_field(const json& j, std::string_view where, const char* name) {
  const json& v = field(j, where, name);
  if (!v.is_array()) {
    throw ScenarioError(std::string(where) + ": field \"" + name + "\" must be an array");
  }
  return v;
}

PriceSpec parse_price(const json& j, const std::string& where) {
  require_object(j, where, {"fn", "params"});
  const std::string fn = string_field(j, where, "fn");
  auto family = parse_price_family(fn);
  if (!family) throw ScenarioError(where + ": unknown price function \"" + fn + "\"");
  PriceSpec spec{*family, 0.0};
  const json& params = field(j, where, "params");
  const std::string pwhere = where + ".params";
  if (*family == PriceFamily::saturating) {
    require_object(params, pwhere, {"beta"});
    spec.beta = number_field(params, pwhere, "beta");
  } else {
    require_object(params, pwhere, {});
  }
  return spec;
}

}  // namespace

GameInstance parse_scenario_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("malformed JSON: ") + e.what());
  }

  require_object(doc, "scenario", {"nodes", "edges", "commodities"});
  GameInstance instance;

  for (const json& n : array_field(doc, "scenario", "nodes")) {
    if (!n.is_string()) throw ScenarioError("nodes: entries must be strings");
    instance.nodes.push_back(n.get<std::string>());
  }

  std::size_t k = 0;
  for (const json& e : array_field(doc, "scenario", "edges")) {
    const std::string where = "edges[" + std::to_string(k++) + "]";
    require_object(e, where, {"id", "from", "to", "a", "b", "c1", "c2", "price"});
    EdgeSpec edge;
    edge.id = string_field(e, where, "id");
    edge.from = string_field(e, where, "from");
    edge.to = string_field(e, where, "to");
    edge.a = number_field(e, where, "a");
    edge.b = number_field(e, where, "b");
    edge.c1 = number_field(e, where, "c1");
    edge.c2 = number_field(e, where, "c2");
    edge.price = parse_price(field(e, where, "price"), where + ".price");
    instance.edges.push_back(std::move(edge));
  }

  k = 0;
  for (const json& c : array_field(doc, "scenario", "commodities")) {
    const std::string where = "commodities[" + std::to_string(k++) + "]";
    require_object(c, where, {"id", "source", "sink", "demand"});
    instance.commodities.push_back({string_field(c, where, "id"),
                                    string_field(c, where, "source"),
                                    string_field(c, where, "sink"),
                                    number_field(c, where, "demand")});
  }
  return instance;
}

GameInstance parse_scenario(std::string_view text) {
  GameInstance instance = parse_scenario_document(text);
  const ValidationReport report = validate_instance(instance);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "invalid scenario:";
    for (const auto& v : report.violations) msg << "\n  " << v.subject << ": " << v.message;
    throw ScenarioError(msg.str());
  }
  return instance;
}

nlohmann::ordered_json scenario_to_json(const GameInstance& instance) {
  nlohmann::ordered_json doc;
  doc["nodes"] = instance.nodes;
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : instance.edges) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    if (e.price.family == PriceFamily::saturating) params["beta"] = e.price.beta;
    doc["edges"].push_back({{"id", e.id},
                            {"from", e.from},
                            {"to", e.to},
                            {"a", e.a},
                            {"b", e.b},
                            {"c1", e.c1},
                            {"c2", e.c2},
                            {"price", {{"fn", to_string(e.price.family)}, {"params", params}}}});
  }
  doc["commodities"] = nlohmann::ordered_json::array();
  for (const auto& c : instance.commodities) {
    doc["commodities"].push_back(
        {{"id", c.id}, {"source", c.source}, {"sink", c.sink}, {"demand", c.demand}});
  }
  return doc;
}

std::string serialize_scenario(const GameInstance& instance) {
  return scenario_to_json(instance).dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read " + path.string());
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace atomroute
