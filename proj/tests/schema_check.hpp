#pragma once

// Minimal JSON-schema checker for the subset used by the report schema:
// type, required, properties, additionalProperties (false), enum, minimum,
// exclusiveMinimum.

#include <string>
#include <vector>

#include "json.hpp"

namespace schema {

using nlohmann::json;

inline bool type_matches(const json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  return false;
}

inline void validate(const json& v, const json& s, const std::string& path, std::vector<std::string>& errors) {
  if (s.contains("type") && !type_matches(v, s["type"].get<std::string>())) {
    errors.push_back(path + ": expected " + s["type"].get<std::string>());
    return;
  }
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) errors.push_back(path + ": value not in enum");
  }
  if (v.is_number()) {
    if (s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) errors.push_back(path + ": below minimum");
    if (s.contains("exclusiveMinimum") && v.get<double>() <= s["exclusiveMinimum"].get<double>())
      errors.push_back(path + ": not above exclusiveMinimum");
  }
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto& key : s["required"])
        if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing " + key.get<std::string>());
    const json props = s.value("properties", json::object());
    for (const auto& [key, value] : v.items()) {
      if (props.contains(key)) {
        validate(value, props[key], path + "/" + key, errors);
      } else if (s.contains("additionalProperties") && s["additionalProperties"] == false) {
        errors.push_back(path + ": unexpected property " + key);
      }
    }
  }
}

inline std::vector<std::string> validate(const json& v, const json& s) {
  std::vector<std::string> errors;
  validate(v, s, "", errors);
  return errors;
}

}  // namespace schema
