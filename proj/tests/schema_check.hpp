#ifndef PARTLOG_SCHEMA_CHECK_HPP
#define PARTLOG_SCHEMA_CHECK_HPP

// Minimal JSON-Schema checker covering the subset the shipped schemas use:
// type, properties, required, items, enum and local $ref into /definitions.

#include <json.hpp>
#include <string>

namespace schemacheck {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline bool validate(const json& value, const json& schema, const json& root,
                     std::string* error) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) {
            if (error) *error = "unsupported $ref " + ref;
            return false;
        }
        return validate(value, root["definitions"][ref.substr(prefix.size())], root, error);
    }
    if (schema.contains("type") && !type_matches(value, schema["type"].get<std::string>())) {
        if (error) *error = "expected type " + schema["type"].get<std::string>() + ", got " + value.dump();
        return false;
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const json& candidate : schema["enum"])
            hit = hit || candidate == value;
        if (!hit) {
            if (error) *error = "value " + value.dump() + " not in enum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const json& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    if (error) *error = "missing required key " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (value.contains(it.key()) && !validate(value[it.key()], it.value(), root, error))
                    return false;
    }
    if (value.is_array() && schema.contains("items"))
        for (const json& element : value)
            if (!validate(element, schema["items"], root, error))
                return false;
    return true;
}

inline bool validate(const json& value, const json& schema, std::string* error = nullptr) {
    return validate(value, schema, schema, error);
}

}  // namespace schemacheck

#endif
