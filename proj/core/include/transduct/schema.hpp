#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "transduct/error.hpp"

namespace transduct {

using Json = nlohmann::json;

class TypeSchema;

enum class SlotKind {
    text,
    integer,
    real,
    boolean,
    enumeration,  // closed set of string values
    list,         // homogeneous list of `element`
    record,       // nested record typed by `inner`
};

const char* slot_kind_name(SlotKind kind);

/// Runtime slot type. Composite kinds carry their payload through shared
/// pointers so the value stays cheap to copy; schemas are acyclic by
/// construction (there is no way to name a schema from within itself).
struct SlotType {
    SlotKind kind = SlotKind::text;
    std::vector<std::string> allowed_values;     // enumeration only
    std::shared_ptr<const SlotType> element;     // list only
    std::shared_ptr<const TypeSchema> inner;     // record only

    static SlotType text() { return {SlotKind::text, {}, nullptr, nullptr}; }
    static SlotType integer() { return {SlotKind::integer, {}, nullptr, nullptr}; }
    static SlotType real() { return {SlotKind::real, {}, nullptr, nullptr}; }
    static SlotType boolean() { return {SlotKind::boolean, {}, nullptr, nullptr}; }
    static SlotType enum_of(std::vector<std::string> values);
    static SlotType list_of(SlotType element_type);
    static SlotType record_of(TypeSchema inner_schema);

    /// Human-readable form used in prompts and error messages, e.g.
    /// "list of text" or "record Answer".
    std::string display() const;
};

/// Structural equality: kind plus payload, recursively. Descriptions and
/// defaults never participate.
bool operator==(const SlotType& a, const SlotType& b);
inline bool operator!=(const SlotType& a, const SlotType& b) { return !(a == b); }

struct Slot {
    std::string name;
    SlotType stype;
    std::string description;
    bool optional = false;
    std::optional<Json> default_value;
};

/// Ordered record type: named slots whose declaration order is significant
/// (it drives canonical serialization and prompt rendering).
class TypeSchema {
public:
    TypeSchema() = default;
    TypeSchema(std::string name, std::vector<Slot> slots);

    const std::string& name() const { return name_; }
    const std::vector<Slot>& slots() const { return slots_; }
    std::size_t size() const { return slots_.size(); }
    bool empty() const { return slots_.empty(); }

    const Slot* find(const std::string& slot_name) const;
    bool has_slot(const std::string& slot_name) const { return find(slot_name) != nullptr; }

    /// (name, structural type) agreement over the full slot list, in order.
    /// Schema names, descriptions, optionality and defaults are ignored.
    friend bool structurally_equal(const TypeSchema& a, const TypeSchema& b);

    Json to_json() const;
    static TypeSchema from_json(const Json& doc);

private:
    std::string name_;
    std::vector<Slot> slots_;
};

/// One record instance. Only present slots are stored; an absent optional
/// slot simply has no entry. Validation (below) is what ties a State to a
/// schema; the State itself is an ordered name→value map.
class State {
public:
    State() = default;

    bool has(const std::string& slot_name) const { return values_.count(slot_name) > 0; }
    const Json& at(const std::string& slot_name) const;
    void set(std::string slot_name, Json value) { values_[std::move(slot_name)] = std::move(value); }
    void erase(const std::string& slot_name) { values_.erase(slot_name); }

    /// True when every slot is absent (the paper's empty record).
    bool empty() const { return values_.empty(); }
    std::size_t present_count() const { return values_.size(); }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    friend bool operator==(const State& a, const State& b) { return a.values_ == b.values_; }
    friend bool operator!=(const State& a, const State& b) { return !(a == b); }

private:
    std::map<std::string, Json> values_;
};

// --- set operations over schemas -------------------------------------------
//
// Slot identity for all set operations is the (name, structural type) pair.

/// De-duplicated union; a's slots first, then b's new ones. Throws
/// SlotConflict when a name occurs on both sides with different types.
TypeSchema schema_union(const TypeSchema& a, const TypeSchema& b);

/// Slots whose (name, type) pair occurs in both, in a's order.
TypeSchema schema_intersection(const TypeSchema& a, const TypeSchema& b);

/// a's slots whose (name, type) pair is absent from b, in a's order.
TypeSchema schema_difference(const TypeSchema& a, const TypeSchema& b);

/// Flattened Cartesian product: all of a's slots then all of b's. Requires
/// disjoint slot names; the result is named "a×b".
TypeSchema schema_product(const TypeSchema& a, const TypeSchema& b);

// --- validation -------------------------------------------------------------

/// Validates a JSON object against a schema and returns the conforming
/// state. Required slots must be present (or carry a default); unknown keys
/// are rejected; scalar coercions are applied (digit string → integer,
/// numeral string → real, "true"/"false" → boolean). Every offence is
/// collected into one ValidationError.
State validate_state(const TypeSchema& schema, const Json& value);
State validate_state(const TypeSchema& schema, const State& value);

/// Canonical rendering of one slot value: nested records follow their inner
/// schema's declaration order, scalars use compact JSON.
std::string canonical_value(const SlotType& stype, const Json& value);

/// Canonical JSON text of a state: keys in schema declaration order, absent
/// slots omitted, no whitespace.
std::string canonical_state(const TypeSchema& schema, const State& state);

}  // namespace transduct
