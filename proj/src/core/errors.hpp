#pragma once

#include <stdexcept>
#include <string>

namespace ftirqc {

/// Stable failure codes, one per distinct failure mode. The C API exposes
/// these verbatim, so values and names must stay in sync with ftirqc.h.
enum class ErrorCode {
    Io,
    MalformedRow,
    DuplicateWavenumber,
    TooFewPoints,
    NonFiniteValue,
    UnsupportedEncoding,
    MissingRecord,
    PointCountMismatch,
    UnsupportedXUnits,
    StepTooLarge,
    WindowTooLarge,
    WindowOutOfRange,
    ZeroDenominator,
    OverUnity,
    InvalidSpectrum,
    InvalidConfig,
    InvalidArgument,
};

inline const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Io: return "Io";
        case ErrorCode::MalformedRow: return "MalformedRow";
        case ErrorCode::DuplicateWavenumber: return "DuplicateWavenumber";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::UnsupportedEncoding: return "UnsupportedEncoding";
        case ErrorCode::MissingRecord: return "MissingRecord";
        case ErrorCode::PointCountMismatch: return "PointCountMismatch";
        case ErrorCode::UnsupportedXUnits: return "UnsupportedXUnits";
        case ErrorCode::StepTooLarge: return "StepTooLarge";
        case ErrorCode::WindowTooLarge: return "WindowTooLarge";
        case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::OverUnity: return "OverUnity";
        case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Exception type used throughout the library. what() is always prefixed
/// with the code name so diagnostics stay greppable.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace ftirqc
