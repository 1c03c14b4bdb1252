#pragma once

#include <stdexcept>
#include <string>

namespace chaincount {

enum class Errc {
    empty_spec,
    non_positive_cell,
    length_mismatch,
    resource_limit,
    odd_cycle,
    disconnected,
    not_nested,
    cell_mismatch,
    zero_pivot,
    singular_input,
    trace_divergence,
    parse_error,
    invalid_argument,
    internal,
};

/// Stable name for an error code ("OddCycle", "NotNested", ...).
constexpr const char* errc_name(Errc code) {
    switch (code) {
        case Errc::empty_spec: return "EmptySpec";
        case Errc::non_positive_cell: return "NonPositiveCell";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::resource_limit: return "ResourceLimit";
        case Errc::odd_cycle: return "OddCycle";
        case Errc::disconnected: return "Disconnected";
        case Errc::not_nested: return "NotNested";
        case Errc::cell_mismatch: return "CellMismatch";
        case Errc::zero_pivot: return "ZeroPivot";
        case Errc::singular_input: return "SingularInput";
        case Errc::trace_divergence: return "TraceDivergence";
        case Errc::parse_error: return "ParseError";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::internal: return "InternalError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace chaincount
