#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace explab {

// Input-dependent rejection reasons surfaced to callers and the CLI.
enum class DiagCode {
    ParseError,
    InvalidInput,
    NotSquarefree,
    NotQuasiHomogeneous,
    WeightsNotUnique,
    WeightsOutOfRange,
    NotIsolated,
    ResourceLimitExceeded,
};

inline const char* diag_code_name(DiagCode c) {
    switch (c) {
        case DiagCode::ParseError: return "ParseError";
        case DiagCode::InvalidInput: return "InvalidInput";
        case DiagCode::NotSquarefree: return "NotSquarefree";
        case DiagCode::NotQuasiHomogeneous: return "NotQuasiHomogeneous";
        case DiagCode::WeightsNotUnique: return "WeightsNotUnique";
        case DiagCode::WeightsOutOfRange: return "WeightsOutOfRange";
        case DiagCode::NotIsolated: return "NotIsolated";
        case DiagCode::ResourceLimitExceeded: return "ResourceLimitExceeded";
    }
    return "Unknown";
}

class diagnostic_error : public std::runtime_error {
public:
    diagnostic_error(DiagCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    DiagCode code() const { return code_; }
    const char* code_name() const { return diag_code_name(code_); }

private:
    DiagCode code_;
};

class parse_error : public diagnostic_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : diagnostic_error(DiagCode::ParseError,
                           message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    // 1-based offset into the input text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace explab
