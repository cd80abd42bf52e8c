#pragma once

#include <variant>

#include <json.hpp>

#include "primecm/construct.hpp"

namespace primecm::record {

using Result = std::variant<construct::FixedOrderResult, construct::FixedSizeResult>;

/// Result objects as JSON. Every big integer is a decimal string; counts are
/// JSON numbers. The layout is documented in docs/json-schema.md.
nlohmann::json to_json(const construct::FixedOrderResult& r);
nlohmann::json to_json(const construct::FixedSizeResult& r);
nlohmann::json to_json(const Result& r);

/// Accepts either a bare result object or a CLI output record carrying one
/// under "result". Throws InvalidArgument on missing or malformed fields.
Result from_json(const nlohmann::json& j);

construct::CheckReport check(const Result& r);

}  // namespace primecm::record
