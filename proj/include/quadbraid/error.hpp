#pragma once

#include <stdexcept>
#include <string>

namespace quadbraid {

/// Domain errors surfaced by the library's public operations. Programmer
/// mistakes (wrong container sizes handed to internal helpers, out-of-range
/// indices and the like) use std::invalid_argument instead.
enum class ErrorKind {
    NegativeModulus,
    LengthMismatch,
    InfiniteGroup,
    MixedTargets,
    TorsionViolation,
    GroupMismatch,
    WitnessMismatch,
    NotPreAdmissible,
    TargetNotDivisible,
    PresentationNotAdmissible,
    PresentationNotOptimal,
    TraceNotQuadratic,
    SearchSpaceTooLarge,
    NotNormalized,
    TargetNotQmodZ,
    ParseError,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NegativeModulus: return "NegativeModulus";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::InfiniteGroup: return "InfiniteGroup";
        case ErrorKind::MixedTargets: return "MixedTargets";
        case ErrorKind::TorsionViolation: return "TorsionViolation";
        case ErrorKind::GroupMismatch: return "GroupMismatch";
        case ErrorKind::WitnessMismatch: return "WitnessMismatch";
        case ErrorKind::NotPreAdmissible: return "NotPreAdmissible";
        case ErrorKind::TargetNotDivisible: return "TargetNotDivisible";
        case ErrorKind::PresentationNotAdmissible: return "PresentationNotAdmissible";
        case ErrorKind::PresentationNotOptimal: return "PresentationNotOptimal";
        case ErrorKind::TraceNotQuadratic: return "TraceNotQuadratic";
        case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::TargetNotQmodZ: return "TargetNotQmodZ";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace quadbraid
