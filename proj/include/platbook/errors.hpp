#pragma once

#include <stdexcept>
#include <string>

namespace platbook {

// Every recoverable failure in the library carries one of these codes so
// callers (CLI, verifier, tests) can branch on the cause without parsing
// message text.
enum class errc {
    malformed_syllable,
    strand_out_of_range,
    zero_exponent,
    unknown_target,
    not_unit_framed,
    orphaned_nesting,
    no_pending_syllable,
    non_unit_exponent,
    wrong_framing,
    hypothesis_violated,
    pipeline_invariant_violated,
    not_normalized,
    unplaceable_circle,
    overflow,
    bad_trace,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::malformed_syllable: return "MalformedSyllable";
        case errc::strand_out_of_range: return "StrandOutOfRange";
        case errc::zero_exponent: return "ZeroExponent";
        case errc::unknown_target: return "UnknownTarget";
        case errc::not_unit_framed: return "NotUnitFramed";
        case errc::orphaned_nesting: return "OrphanedNesting";
        case errc::no_pending_syllable: return "NoPendingSyllable";
        case errc::non_unit_exponent: return "NonUnitExponent";
        case errc::wrong_framing: return "WrongFraming";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::pipeline_invariant_violated: return "PipelineInvariantViolated";
        case errc::not_normalized: return "NotNormalized";
        case errc::unplaceable_circle: return "UnplaceableCircle";
        case errc::overflow: return "Overflow";
        case errc::bad_trace: return "BadTrace";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace platbook
