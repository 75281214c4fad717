#pragma once

#include <stdexcept>
#include <string>

namespace tmc {

enum class ErrorCode {
    InvalidMeasure,
    DegreeTooHigh,
    CurveNotRepresentable,
    SingularAlt,
    InvalidCurve,
    UnboundParameter,
    RangeError,
    NotPSD,
    WrongDegree,
    NotPure,
    ExtractionFailed,
    ZeroAtom,
    InvalidInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidMeasure: return "InvalidMeasure";
        case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorCode::CurveNotRepresentable: return "CurveNotRepresentable";
        case ErrorCode::SingularAlt: return "SingularAlt";
        case ErrorCode::InvalidCurve: return "InvalidCurve";
        case ErrorCode::UnboundParameter: return "UnboundParameter";
        case ErrorCode::RangeError: return "RangeError";
        case ErrorCode::NotPSD: return "NotPSD";
        case ErrorCode::WrongDegree: return "WrongDegree";
        case ErrorCode::NotPure: return "NotPure";
        case ErrorCode::ExtractionFailed: return "ExtractionFailed";
        case ErrorCode::ZeroAtom: return "ZeroAtom";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace tmc
