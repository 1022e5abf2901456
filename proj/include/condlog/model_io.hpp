#pragma once

#include <string>

#include <json.hpp>

#include "condlog/structure.hpp"

namespace condlog {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weight: [[a_num, a_den, k, c_num, c_den], ...]; numbers as JSON integers or
// decimal strings.
nlohmann::json expoly_to_json(const ExpPoly& p);
ExpPoly expoly_from_json(const nlohmann::json& j);

// Model file:
// {"domain":[names], "worlds":[{"name", "weight", "predicates":{P:[[args..]..]},
//  "functions":{f:[[args.., value]..]}, "constants":{c: value}}]}
// Elements are referred to by name. Throws FormatError.
PSStructure structure_from_json(const nlohmann::json& j);
nlohmann::json structure_to_json(const PSStructure& m);

Valuation valuation_from_json(const PSStructure& m, const nlohmann::json& j);
nlohmann::json valuation_to_json(const PSStructure& m, const Valuation& v);

nlohmann::json read_json_file(const std::string& path);  // throws FormatError
PSStructure read_model_file(const std::string& path);

}  // namespace condlog
