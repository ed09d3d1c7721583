#pragma once

// Minimal JSON-Schema checker covering the subset the report schema uses:
// type (single or list), properties, required, items, enum,
// additionalProperties (bool or schema). Returns the first violation path,
// empty string when valid.

#include <string>

#include "showprof/json.hpp"

namespace schema_check {

using showprof::Json;

inline bool type_matches(const Json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline std::string validate(const Json& value, const Json& schema, const std::string& path) {
    if (auto it = schema.find("type"); it != schema.end()) {
        bool ok = false;
        if (it->is_array()) {
            for (const auto& t : *it)
                if (type_matches(value, t.get<std::string>())) ok = true;
        } else {
            ok = type_matches(value, it->get<std::string>());
        }
        if (!ok) return path + ": type mismatch (" + it->dump() + " vs " + value.type_name() + ")";
    }
    if (auto it = schema.find("enum"); it != schema.end()) {
        bool ok = false;
        for (const auto& candidate : *it)
            if (candidate == value) ok = true;
        if (!ok) return path + ": not in enum";
    }
    if (value.is_object()) {
        if (auto req = schema.find("required"); req != schema.end())
            for (const auto& key : *req)
                if (!value.contains(key.get<std::string>()))
                    return path + ": missing required key '" + key.get<std::string>() + "'";
        const Json* props = nullptr;
        if (auto it = schema.find("properties"); it != schema.end()) props = &*it;
        const Json* additional = nullptr;
        if (auto it = schema.find("additionalProperties"); it != schema.end()) additional = &*it;
        for (const auto& [key, child] : value.items()) {
            const Json* child_schema = nullptr;
            if (props && props->contains(key)) child_schema = &props->at(key);
            if (!child_schema) {
                if (additional && additional->is_boolean() && !additional->get<bool>())
                    return path + ": unexpected key '" + key + "'";
                if (additional && additional->is_object()) child_schema = additional;
            }
            if (child_schema) {
                std::string err = validate(child, *child_schema, path + "." + key);
                if (!err.empty()) return err;
            }
        }
    }
    if (value.is_array()) {
        if (auto it = schema.find("items"); it != schema.end() && it->is_object()) {
            std::size_t i = 0;
            for (const auto& element : value) {
                std::string err =
                    validate(element, *it, path + "[" + std::to_string(i++) + "]");
                if (!err.empty()) return err;
            }
        }
    }
    return "";
}

inline std::string validate(const Json& value, const Json& schema) {
    return validate(value, schema, "$");
}

}  // namespace schema_check
