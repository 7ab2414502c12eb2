#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace transduct {

enum class ErrorCode {
    // schema / state
    slot_conflict,
    validation,
    unknown_slot,
    // agentic algebra
    type_mismatch,
    shape_mismatch,
    overlap_error,
    // prompt rendering
    empty_target_example,
    unresolved_placeholder,
    // backend, retryable
    timeout,
    rate_limited,
    transport,
    fault_injected,
    // decoding / transduction
    malformed_output,
    no_examples,
    // dataflow
    item_error,
    reduce_error,
    non_convergence,
    stage_error,
    // optimizer
    unscored_candidate,
    generation_failed,
    // cli
    config_error,
    data_error,
    inference_ambiguous,
};

const char* error_code_name(ErrorCode code);

/// Backend faults are retryable; everything else is a contract violation.
bool is_retryable(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Error(ErrorCode code, std::string message, std::vector<std::string> details)
        : std::runtime_error(join(message, details)),
          code_(code),
          details_(std::move(details)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::vector<std::string>& details() const noexcept { return details_; }

private:
    static std::string join(const std::string& message,
                            const std::vector<std::string>& details);

    ErrorCode code_;
    std::vector<std::string> details_;
};

}  // namespace transduct
