#pragma once

#include <string>

#include <json.hpp>

#include "concord/copula.hpp"

namespace concord {

/// JSON copula-spec format (exact field names; unknown fields rejected):
///   {"type":"M"}  {"type":"W"}  {"type":"Pi"}
///   {"type":"shuffle","shuffle":{"breaks":[...],"perm":[...],"flips":[...]}}
///   {"type":"mixture","mixture":{"terms":[{"weight":w,"copula":{...}},...]}}
/// Throws CopulaError(BadCopulaSpec) on malformed input; shuffle and mixture
/// contents are validated by their constructors.
CopulaExpr copula_from_json(const nlohmann::json& j);

nlohmann::json copula_to_json(const CopulaExpr& c);

/// Reads and parses a copula-spec file.
CopulaExpr load_copula_file(const std::string& path);

}  // namespace concord
