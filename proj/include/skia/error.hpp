#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skia {

enum class ErrorCode {
    DegenerateInput,
    ParallelLines,
    CoincidentLines,
    SpindleNotSupported,
    NonPositiveDimension,
    InternalInconsistency,
    InvalidResolution,
    EmptyShadeRegion,
    DegenerateCurve,
    SelfIntersecting,
    ParseError,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::SpindleNotSupported: return "SpindleNotSupported";
    case ErrorCode::NonPositiveDimension: return "NonPositiveDimension";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::InvalidResolution: return "InvalidResolution";
    case ErrorCode::EmptyShadeRegion: return "EmptyShadeRegion";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// command line front-end can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace skia
