#include "transduct/schema.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace transduct {

const char* slot_kind_name(SlotKind kind) {
    switch (kind) {
        case SlotKind::text: return "text";
        case SlotKind::integer: return "integer";
        case SlotKind::real: return "real";
        case SlotKind::boolean: return "boolean";
        case SlotKind::enumeration: return "enum";
        case SlotKind::list: return "list";
        case SlotKind::record: return "record";
    }
    return "unknown";
}

SlotType SlotType::enum_of(std::vector<std::string> values) {
    if (values.empty()) {
        throw Error(ErrorCode::validation, "enum slot type needs at least one allowed value");
    }
    SlotType t;
    t.kind = SlotKind::enumeration;
    t.allowed_values = std::move(values);
    return t;
}

SlotType SlotType::list_of(SlotType element_type) {
    SlotType t;
    t.kind = SlotKind::list;
    t.element = std::make_shared<const SlotType>(std::move(element_type));
    return t;
}

SlotType SlotType::record_of(TypeSchema inner_schema) {
    SlotType t;
    t.kind = SlotKind::record;
    t.inner = std::make_shared<const TypeSchema>(std::move(inner_schema));
    return t;
}

std::string SlotType::display() const {
    switch (kind) {
        case SlotKind::enumeration: return "enum";
        case SlotKind::list: return "list of " + element->display();
        case SlotKind::record: return "record " + inner->name();
        default: return slot_kind_name(kind);
    }
}

bool operator==(const SlotType& a, const SlotType& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case SlotKind::enumeration:
            return a.allowed_values == b.allowed_values;
        case SlotKind::list:
            return *a.element == *b.element;
        case SlotKind::record:
            return structurally_equal(*a.inner, *b.inner);
        default:
            return true;
    }
}

TypeSchema::TypeSchema(std::string name, std::vector<Slot> slots)
    : name_(std::move(name)), slots_(std::move(slots)) {
    std::set<std::string> seen;
    for (const auto& slot : slots_) {
        if (slot.name.empty()) {
            throw Error(ErrorCode::validation, "schema '" + name_ + "' has a slot with an empty name");
        }
        if (!seen.insert(slot.name).second) {
            throw Error(ErrorCode::slot_conflict,
                        "schema '" + name_ + "' declares slot '" + slot.name + "' twice");
        }
    }
}

const Slot* TypeSchema::find(const std::string& slot_name) const {
    for (const auto& slot : slots_) {
        if (slot.name == slot_name) return &slot;
    }
    return nullptr;
}

bool structurally_equal(const TypeSchema& a, const TypeSchema& b) {
    if (a.slots_.size() != b.slots_.size()) return false;
    for (std::size_t i = 0; i < a.slots_.size(); ++i) {
        if (a.slots_[i].name != b.slots_[i].name) return false;
        if (!(a.slots_[i].stype == b.slots_[i].stype)) return false;
    }
    return true;
}

namespace {

Json slot_type_to_json(const SlotType& t) {
    Json doc;
    doc["kind"] = slot_kind_name(t.kind);
    if (t.kind == SlotKind::enumeration) doc["allowed_values"] = t.allowed_values;
    if (t.kind == SlotKind::list) doc["element"] = slot_type_to_json(*t.element);
    if (t.kind == SlotKind::record) doc["inner"] = t.inner->to_json();
    return doc;
}

SlotType slot_type_from_json(const Json& doc) {
    if (!doc.contains("kind") || !doc["kind"].is_string()) {
        throw Error(ErrorCode::validation, "slot type document is missing a string 'kind'");
    }
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "text") return SlotType::text();
    if (kind == "integer") return SlotType::integer();
    if (kind == "real") return SlotType::real();
    if (kind == "boolean") return SlotType::boolean();
    if (kind == "enum") {
        if (!doc.contains("allowed_values") || !doc["allowed_values"].is_array() ||
            doc["allowed_values"].empty()) {
            throw Error(ErrorCode::validation, "enum slot type needs non-empty 'allowed_values'");
        }
        return SlotType::enum_of(doc["allowed_values"].get<std::vector<std::string>>());
    }
    if (kind == "list") {
        if (!doc.contains("element")) {
            throw Error(ErrorCode::validation, "list slot type needs an 'element' type");
        }
        return SlotType::list_of(slot_type_from_json(doc["element"]));
    }
    if (kind == "record") {
        if (!doc.contains("inner")) {
            throw Error(ErrorCode::validation, "record slot type needs an 'inner' schema");
        }
        return SlotType::record_of(TypeSchema::from_json(doc["inner"]));
    }
    throw Error(ErrorCode::validation, "unknown slot kind '" + kind + "'");
}

}  // namespace

Json TypeSchema::to_json() const {
    Json doc;
    doc["name"] = name_;
    Json slots = Json::array();
    for (const auto& slot : slots_) {
        Json s = slot_type_to_json(slot.stype);
        s["name"] = slot.name;
        if (!slot.description.empty()) s["description"] = slot.description;
        s["optional"] = slot.optional;
        if (slot.default_value) s["default"] = *slot.default_value;
        slots.push_back(std::move(s));
    }
    doc["slots"] = std::move(slots);
    return doc;
}

TypeSchema TypeSchema::from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("slots") || !doc["slots"].is_array()) {
        throw Error(ErrorCode::validation, "schema document needs a 'slots' array");
    }
    std::vector<Slot> slots;
    for (const auto& s : doc["slots"]) {
        Slot slot;
        if (!s.contains("name") || !s["name"].is_string()) {
            throw Error(ErrorCode::validation, "schema slot entry is missing a string 'name'");
        }
        slot.name = s["name"].get<std::string>();
        slot.stype = slot_type_from_json(s);
        if (s.contains("description")) slot.description = s["description"].get<std::string>();
        if (s.contains("optional")) slot.optional = s["optional"].get<bool>();
        if (s.contains("default")) slot.default_value = s["default"];
        slots.push_back(std::move(slot));
    }
    std::string name = doc.contains("name") ? doc["name"].get<std::string>() : "";
    return TypeSchema(std::move(name), std::move(slots));
}

const Json& State::at(const std::string& slot_name) const {
    auto it = values_.find(slot_name);
    if (it == values_.end()) {
        throw Error(ErrorCode::unknown_slot, "state has no value for slot '" + slot_name + "'");
    }
    return it->second;
}

// --- set operations ---------------------------------------------------------

TypeSchema schema_union(const TypeSchema& a, const TypeSchema& b) {
    std::vector<Slot> slots = a.slots();
    for (const auto& slot : b.slots()) {
        const Slot* existing = a.find(slot.name);
        if (existing == nullptr) {
            slots.push_back(slot);
        } else if (!(existing->stype == slot.stype)) {
            throw Error(ErrorCode::slot_conflict,
                        "union: slot '" + slot.name + "' is " + existing->stype.display() +
                            " in '" + a.name() + "' but " + slot.stype.display() + " in '" +
                            b.name() + "'");
        }
    }
    return TypeSchema(a.name(), std::move(slots));
}

TypeSchema schema_intersection(const TypeSchema& a, const TypeSchema& b) {
    std::vector<Slot> slots;
    for (const auto& slot : a.slots()) {
        const Slot* other = b.find(slot.name);
        if (other != nullptr && other->stype == slot.stype) {
            slots.push_back(slot);
        }
    }
    return TypeSchema(a.name(), std::move(slots));
}

TypeSchema schema_difference(const TypeSchema& a, const TypeSchema& b) {
    std::vector<Slot> slots;
    for (const auto& slot : a.slots()) {
        const Slot* other = b.find(slot.name);
        if (other == nullptr || !(other->stype == slot.stype)) {
            slots.push_back(slot);
        }
    }
    return TypeSchema(a.name(), std::move(slots));
}

TypeSchema schema_product(const TypeSchema& a, const TypeSchema& b) {
    std::vector<Slot> slots = a.slots();
    for (const auto& slot : b.slots()) {
        if (a.find(slot.name) != nullptr) {
            throw Error(ErrorCode::slot_conflict,
                        "product: slot '" + slot.name + "' appears in both '" + a.name() +
                            "' and '" + b.name() + "'");
        }
        slots.push_back(slot);
    }
    return TypeSchema(a.name() + "\xc3\x97" + b.name(), std::move(slots));
}

// --- validation -------------------------------------------------------------

namespace {

bool parse_integer(const std::string& text, long long& out) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) return false;
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') return false;
    }
    errno = 0;
    char* end = nullptr;
    out = std::strtoll(text.c_str(), &end, 10);
    return errno == 0 && end == text.c_str() + text.size();
}

bool parse_real(const std::string& text, double& out) {
    if (text.empty()) return false;
    char* end = nullptr;
    out = std::strtod(text.c_str(), &end);
    return end == text.c_str() + text.size();
}

/// Validates (and normalizes) one value against a slot type. Returns the
/// normalized JSON value; appends a reason to `errors` on failure.
std::optional<Json> check_value(const SlotType& stype, const Json& value,
                                const std::string& path, std::vector<std::string>& errors) {
    switch (stype.kind) {
        case SlotKind::text:
            if (value.is_string()) return value;
            errors.push_back(path + ": expected text, got " + std::string(value.type_name()));
            return std::nullopt;
        case SlotKind::integer: {
            if (value.is_number_integer()) return value;
            if (value.is_string()) {
                long long v = 0;
                if (parse_integer(value.get<std::string>(), v)) return Json(v);
            }
            errors.push_back(path + ": expected integer, got " + value.dump());
            return std::nullopt;
        }
        case SlotKind::real: {
            if (value.is_number()) return Json(value.get<double>());
            if (value.is_string()) {
                double v = 0.0;
                if (parse_real(value.get<std::string>(), v)) return Json(v);
            }
            errors.push_back(path + ": expected real, got " + value.dump());
            return std::nullopt;
        }
        case SlotKind::boolean: {
            if (value.is_boolean()) return value;
            if (value.is_string()) {
                const auto& s = value.get_ref<const std::string&>();
                if (s == "true") return Json(true);
                if (s == "false") return Json(false);
            }
            errors.push_back(path + ": expected boolean, got " + value.dump());
            return std::nullopt;
        }
        case SlotKind::enumeration: {
            if (value.is_string()) {
                const auto& s = value.get_ref<const std::string&>();
                if (std::find(stype.allowed_values.begin(), stype.allowed_values.end(), s) !=
                    stype.allowed_values.end()) {
                    return value;
                }
            }
            errors.push_back(path + ": value " + value.dump() + " is not one of the allowed " +
                             std::to_string(stype.allowed_values.size()) + " enum values");
            return std::nullopt;
        }
        case SlotKind::list: {
            if (!value.is_array()) {
                errors.push_back(path + ": expected list, got " + std::string(value.type_name()));
                return std::nullopt;
            }
            Json out = Json::array();
            bool ok = true;
            for (std::size_t i = 0; i < value.size(); ++i) {
                auto elem = check_value(*stype.element, value[i],
                                        path + "[" + std::to_string(i) + "]", errors);
                if (elem) {
                    out.push_back(std::move(*elem));
                } else {
                    ok = false;
                }
            }
            if (!ok) return std::nullopt;
            return out;
        }
        case SlotKind::record: {
            if (!value.is_object()) {
                errors.push_back(path + ": expected record, got " + std::string(value.type_name()));
                return std::nullopt;
            }
            try {
                State nested = validate_state(*stype.inner, value);
                Json out = Json::object();
                for (const auto& [k, v] : nested) out[k] = v;
                return out;
            } catch (const Error& e) {
                for (const auto& d : e.details()) errors.push_back(path + "." + d);
                if (e.details().empty()) errors.push_back(path + ": " + e.what());
                return std::nullopt;
            }
        }
    }
    errors.push_back(path + ": unhandled slot kind");
    return std::nullopt;
}

}  // namespace

State validate_state(const TypeSchema& schema, const Json& value) {
    if (!value.is_object()) {
        throw Error(ErrorCode::validation,
                    "state for schema '" + schema.name() + "' must be a JSON object, got " +
                        std::string(value.type_name()));
    }

    std::vector<std::string> errors;
    for (auto it = value.begin(); it != value.end(); ++it) {
        if (!schema.has_slot(it.key())) {
            errors.push_back(it.key() + ": unknown slot");
        }
    }

    State state;
    for (const auto& slot : schema.slots()) {
        if (value.contains(slot.name) && !value[slot.name].is_null()) {
            auto checked = check_value(slot.stype, value[slot.name], slot.name, errors);
            if (checked) state.set(slot.name, std::move(*checked));
        } else if (slot.default_value) {
            auto checked = check_value(slot.stype, *slot.default_value, slot.name, errors);
            if (checked) state.set(slot.name, std::move(*checked));
        } else if (!slot.optional) {
            errors.push_back(slot.name + ": required slot is missing");
        }
    }

    if (!errors.empty()) {
        throw Error(ErrorCode::validation,
                    "state does not conform to schema '" + schema.name() + "'", std::move(errors));
    }
    return state;
}

State validate_state(const TypeSchema& schema, const State& value) {
    Json doc = Json::object();
    for (const auto& [k, v] : value) doc[k] = v;
    return validate_state(schema, doc);
}

// --- canonical rendering ----------------------------------------------------

std::string canonical_value(const SlotType& stype, const Json& value) {
    switch (stype.kind) {
        case SlotKind::list: {
            std::string out = "[";
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (i > 0) out += ",";
                out += canonical_value(*stype.element, value[i]);
            }
            return out + "]";
        }
        case SlotKind::record: {
            std::string out = "{";
            bool first = true;
            for (const auto& slot : stype.inner->slots()) {
                if (!value.contains(slot.name)) continue;
                if (!first) out += ",";
                first = false;
                out += Json(slot.name).dump() + ":" + canonical_value(slot.stype, value[slot.name]);
            }
            return out + "}";
        }
        default:
            return value.dump();
    }
}

std::string canonical_state(const TypeSchema& schema, const State& state) {
    std::string out = "{";
    bool first = true;
    for (const auto& slot : schema.slots()) {
        if (!state.has(slot.name)) continue;
        if (!first) out += ",";
        first = false;
        out += Json(slot.name).dump() + ":" + canonical_value(slot.stype, state.at(slot.name));
    }
    return out + "}";
}

}  // namespace transduct
