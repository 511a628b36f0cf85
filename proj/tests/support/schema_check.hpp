#pragma once

// Minimal structural validator for the subset of JSON Schema the plan
// document uses: type, required, properties, items, enum.

#include <string>

#include <nlohmann/json.hpp>

namespace schema_check {

inline bool type_matches(const nlohmann::json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    return false;
}

/// Returns an empty string when `value` conforms to `schema`, otherwise a
/// description of the first violation found at `where`.
inline std::string validate(const nlohmann::json& schema, const nlohmann::json& value,
                            const std::string& where = "$") {
    if (schema.contains("type")) {
        const auto type = schema.at("type").get<std::string>();
        if (!type_matches(value, type))
            return where + ": expected " + type + ", got " + std::string(value.type_name());
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& candidate : schema.at("enum"))
            if (candidate == value) hit = true;
        if (!hit) return where + ": value not in enum";
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema.at("required")) {
                if (!value.contains(key.get<std::string>()))
                    return where + ": missing required key '" + key.get<std::string>() + "'";
            }
        }
        if (schema.contains("properties")) {
            for (const auto& [key, subschema] : schema.at("properties").items()) {
                if (!value.contains(key)) continue;
                const std::string err = validate(subschema, value.at(key), where + "." + key);
                if (!err.empty()) return err;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            const std::string err = validate(schema.at("items"), value.at(i),
                                             where + "[" + std::to_string(i) + "]");
            if (!err.empty()) return err;
        }
    }
    return "";
}

}  // namespace schema_check
