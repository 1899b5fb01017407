#pragma once

#include <string>

#include "json.hpp"

namespace gcn {

// Validates a JSON value against the subset of JSON Schema the shipped
// schemas use: type, properties, required, items (single schema), enum,
// minimum. Returns true on success; otherwise fills *error with the first
// failing path.
inline bool validate_schema(const nlohmann::json& schema, const nlohmann::json& value,
                            std::string* error = nullptr,
                            const std::string& path = "$") {
  auto fail = [&](const std::string& msg) {
    if (error && error->empty()) *error = path + ": " + msg;
    return false;
  };

  if (schema.contains("type")) {
    const std::string& t = schema.at("type").get_ref<const std::string&>();
    bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
              (t == "string" && value.is_string()) ||
              (t == "integer" && value.is_number_integer()) ||
              (t == "number" && value.is_number()) ||
              (t == "boolean" && value.is_boolean()) || (t == "null" && value.is_null());
    if (!ok) return fail("expected type " + t);
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& option : schema.at("enum"))
      if (option == value) found = true;
    if (!found) return fail("value not in enum");
  }
  if (schema.contains("minimum") && value.is_number()) {
    if (value.get<double>() < schema.at("minimum").get<double>())
      return fail("below minimum");
  }
  if (schema.contains("required") && value.is_object()) {
    for (const auto& key : schema.at("required"))
      if (!value.contains(key.get_ref<const std::string&>()))
        return fail("missing required key " + key.get<std::string>());
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema.at("properties").items())
      if (value.contains(key) &&
          !validate_schema(sub, value.at(key), error, path + "." + key))
        return false;
  }
  if (schema.contains("items") && value.is_array()) {
    const auto& sub = schema.at("items");
    for (size_t i = 0; i < value.size(); ++i)
      if (!validate_schema(sub, value[i], error, path + "[" + std::to_string(i) + "]"))
        return false;
  }
  return true;
}

}  // namespace gcn
