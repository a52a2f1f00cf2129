#include "mixcay/errors.hpp"

namespace mixcay {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::DegenerateCombination: return "DegenerateCombination";
    case ErrorCode::OrthogonalityFailure: return "OrthogonalityFailure";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::IdentityElement: return "IdentityElement";
    case ErrorCode::NotInGamma3: return "NotInGamma3";
    case ErrorCode::IdentityInSet: return "IdentityInSet";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace mixcay
