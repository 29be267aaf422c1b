#pragma once

// Scenario documents: the JSON form of a GameInstance.
//
//   {"nodes": ["s", "t"],
//    "edges": [{"id": "e1", "from": "s", "to": "t", "a": 1, "b": 0,
//               "c1": 1, "c2": 0, "price": {"fn": "zero", "params": {}}}],
//    "commodities": [{"id": "p1", "source": "s", "sink": "t", "demand": 1}]}
//
// Unknown fields are rejected. The saturating price takes {"beta": <num>}.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "atomroute/model.hpp"

namespace atomroute {

// Structural parse only: types, required and unknown fields. The result may
// still violate instance invariants; see validate_instance(). Throws
// ScenarioError, with the JSON position for syntax errors.
GameInstance parse_scenario_document(std::string_view text);

// Structural parse followed by validation. Throws ScenarioError listing every
// violation. Path lists are left empty.
GameInstance parse_scenario(std::string_view text);

nlohmann::ordered_json scenario_to_json(const GameInstance& instance);
std::string serialize_scenario(const GameInstance& instance);

// File helpers. I/O failures throw std::runtime_error (not ScenarioError).
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace atomroute
