#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transduct/schema.hpp"

namespace transduct {

/// Placeholder template. `text` uses {name} placeholders ({{ and }} escape
/// literal braces); every placeholder must resolve against a built-in
/// ("source", "instructions"), a param key, or a slot of the source schema.
/// An empty `text` selects the default layout: instructions labeled TASK,
/// the serialized source labeled SOURCE.
struct PromptTemplate {
    std::string text;
    std::map<std::string, std::string> params;
};

struct RenderedPrompt {
    std::string system_text;
    std::string user_text;
    std::string target_schema_block;
    std::string fewshot_block;
};

/// The information object feeding one prompt: either a typed state or a
/// plain string.
struct SourceView {
    const TypeSchema* schema = nullptr;
    const State* state = nullptr;
    const std::string* text = nullptr;

    static SourceView of(const TypeSchema& s, const State& st) { return {&s, &st, nullptr}; }
    static SourceView of(const std::string& t) { return {nullptr, nullptr, &t}; }
};

/// Canonical JSON of a state, keys in schema order, absent slots omitted.
/// `slots`, when given, restricts to that subset (still schema-ordered).
std::string render_state(const TypeSchema& schema, const State& state,
                         const std::vector<std::string>* slots = nullptr);

/// Target-schema block shown to the model: a header line plus one line per
/// slot (`name (kind, required|optional): description`, enums list their
/// values).
std::string render_target_schema(const TypeSchema& schema);

/// INPUT/OUTPUT example stanzas, pair order preserved. Empty for no pairs.
/// Throws EmptyTargetExample when a pair's target has no slot present.
std::string render_fewshot(const std::vector<std::pair<State, State>>& pairs,
                           const TypeSchema& source_schema, const TypeSchema& target_schema);

/// Fills `tpl` against the source and assembles the full prompt:
///   filled template ⊕ context block ⊕ few-shot block ⊕ target-schema block
///   ⊕ "Generate Output as JSON"
/// where ⊕ joins non-empty segments with a blank line. Instructions that the
/// template does not consume via {instructions} are prepended as their own
/// segment. system_text is derived from the template params
/// (role/goal/expected_output).
RenderedPrompt compose_prompt(const PromptTemplate& tpl, const SourceView& source,
                              const std::string& fewshot_block, const std::string& instructions,
                              const TypeSchema& target, const std::string& context_block = "");

/// Fixed trailing directive of every composed prompt.
extern const char* const kOutputDirective;

/// FNV-1a over system+user text; used for audit records and caching keys.
std::uint64_t prompt_fingerprint(const RenderedPrompt& prompt);

}  // namespace transduct
