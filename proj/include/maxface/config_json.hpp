#pragma once

#include <json.hpp>

#include "maxface/configuration.hpp"

namespace maxface {

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Configuration& config);
// Throws Error(InvalidConfiguration) on schema or invariant violations.
Configuration configuration_from_json(const nlohmann::json& j);

nlohmann::json to_json(NeckId neck);

}  // namespace maxface
