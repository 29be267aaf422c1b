#pragma once

// JSON forms of the report types, field for field. from_json inverts to_json
// exactly: doubles are written in shortest round-trip form.

#include <json.hpp>

#include "atomroute/braess.hpp"
#include "atomroute/engine.hpp"
#include "atomroute/model.hpp"
#include "atomroute/oracle.hpp"

namespace atomroute {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const StrategyProfile& profile);
ordered_json to_json(const PriceSpec& price);
ordered_json to_json(const ValidationReport& report);
ordered_json to_json(const EquilibriumReport& report);
ordered_json to_json(const DynamicsResult& result);
ordered_json to_json(const PoAReport& report);
ordered_json to_json(const BraessReport& report);

StrategyProfile profile_from_json(const ordered_json& j);
PriceSpec price_from_json(const ordered_json& j);
ValidationReport validation_report_from_json(const ordered_json& j);
EquilibriumReport equilibrium_report_from_json(const ordered_json& j);
DynamicsResult dynamics_result_from_json(const ordered_json& j);
PoAReport poa_report_from_json(const ordered_json& j);
BraessReport braess_report_from_json(const ordered_json& j);

}  // namespace atomroute
