/*
 * Validator for the JSON-schema subset used by the published schemas:
 * type (string or union array), properties, required,
 * additionalProperties:false, items, enum. Returns the first violation as
 * a human-readable path + message, empty string when valid.
 */
#pragma once

#include <string>

#include "json.hpp"

namespace testsupport {


inline bool json_type_matches(const nlohmann::json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

inline std::string validate_json(const nlohmann::json& v, const nlohmann::json& schema,
                                 const std::string& path = "$") {
    if (schema.contains("type")) {
        const auto& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = json_type_matches(v, t.get<std::string>());
        } else {
            for (const auto& alt : t)
                if (json_type_matches(v, alt.get<std::string>())) ok = true;
        }
        if (!ok) return path + ": type mismatch, got " + std::string(v.type_name());
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"])
            if (v == alt) ok = true;
        if (!ok) return path + ": value not in enum";
    }
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!v.contains(key.get<std::string>()))
                    return path + ": missing required key " + key.get<std::string>();
        const nlohmann::json* props =
            schema.contains("properties") ? &schema["properties"] : nullptr;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (props && props->contains(it.key())) {
                std::string err = validate_json(it.value(), (*props)[it.key()],
                                                path + "." + it.key());
                if (!err.empty()) return err;
            } else if (schema.contains("additionalProperties") &&
                       schema["additionalProperties"] == false) {
                return path + ": unexpected key " + it.key();
            }
        }
    }
    if (v.is_array() && schema.contains("items")) {
        size_t i = 0;
        for (const auto& item : v) {
            std::string err = validate_json(item, schema["items"],
                                            path + "[" + std::to_string(i) + "]");
            if (!err.empty()) return err;
            ++i;
        }
    }
    return "";
}

} // namespace testsupport
