#include "transduct/error.hpp"

namespace transduct {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::slot_conflict: return "SlotConflict";
        case ErrorCode::validation: return "ValidationError";
        case ErrorCode::unknown_slot: return "UnknownSlot";
        case ErrorCode::type_mismatch: return "TypeMismatch";
        case ErrorCode::shape_mismatch: return "ShapeMismatch";
        case ErrorCode::overlap_error: return "OverlapError";
        case ErrorCode::empty_target_example: return "EmptyTargetExample";
        case ErrorCode::unresolved_placeholder: return "UnresolvedPlaceholder";
        case ErrorCode::timeout: return "Timeout";
        case ErrorCode::rate_limited: return "RateLimited";
        case ErrorCode::transport: return "Transport";
        case ErrorCode::fault_injected: return "FaultInjected";
        case ErrorCode::malformed_output: return "MalformedOutput";
        case ErrorCode::no_examples: return "NoExamples";
        case ErrorCode::item_error: return "ItemError";
        case ErrorCode::reduce_error: return "ReduceError";
        case ErrorCode::non_convergence: return "NonConvergence";
        case ErrorCode::stage_error: return "StageError";
        case ErrorCode::unscored_candidate: return "UnscoredCandidate";
        case ErrorCode::generation_failed: return "GenerationFailed";
        case ErrorCode::config_error: return "ConfigError";
        case ErrorCode::data_error: return "DataError";
        case ErrorCode::inference_ambiguous: return "InferenceAmbiguous";
    }
    return "Error";
}

bool is_retryable(ErrorCode code) {
    switch (code) {
        case ErrorCode::timeout:
        case ErrorCode::rate_limited:
        case ErrorCode::transport:
        case ErrorCode::fault_injected:
            return true;
        default:
            return false;
    }
}

std::string Error::join(const std::string& message,
                        const std::vector<std::string>& details) {
    std::string out = message;
    for (const auto& d : details) {
        out += "\n  - " + d;
    }
    return out;
}

}  // namespace transduct
