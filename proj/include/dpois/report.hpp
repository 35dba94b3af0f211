#pragma once

#include <string>

#include <json.hpp>

#include "dpois/moments.hpp"
#include "dpois/value.hpp"

namespace dpois {

/// "p/q" for exact values, {"lo": "p/q", "hi": "p/q"} for intervals.
nlohmann::ordered_json to_json(const Value& v);

/// {"suite", "seed", "checks": [{"id", "lambda", "alpha", "n", "lhs", "rhs",
/// "method", "pass", "detail"}], "summary": {"total", "failed", "verdict"}}
nlohmann::ordered_json to_json(const SuiteReport& report);

}  // namespace dpois
