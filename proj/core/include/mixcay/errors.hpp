#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixcay {

enum class ErrorCode {
  UnsupportedFamily,
  SizeExceeded,
  DegenerateCombination,
  OrthogonalityFailure,
  NotADivisor,
  BadResidue,
  IdentityElement,
  NotInGamma3,
  IdentityInSet,
  NotNormal,
  ConvergenceFailure,
  EnumerationTooLarge,
  InvariantViolation,
  BadInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception; `code()` names
/// the failure class so callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mixcay
