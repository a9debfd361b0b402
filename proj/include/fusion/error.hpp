#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusion {

enum class ErrorCode {
  CapExceeded,
  NotNormal,
  NotSylow,
  NotAGroup,
  ParseError,
  MorphismOutsideR,
  DomainMismatch,
  NotSaturated,
  NotStronglyClosed,
  NotConstrained,
  NotCentralizing,
  NotRealized,
  NotFound,
  NotUnique,
  VerificationFailed,
  TheoremViolation,
  FactorizationMissing,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
/// VerificationFailed, TheoremViolation, NotFound/NotUnique (from model search)
/// and FactorizationMissing are internal-consistency alarms: they indicate
/// that a constructed object failed its post-verification.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
  : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
  {}

  ErrorCode code() const noexcept { return code_; }

  bool is_alarm() const noexcept
  {
    return code_ == ErrorCode::VerificationFailed ||
           code_ == ErrorCode::TheoremViolation ||
           code_ == ErrorCode::FactorizationMissing ||
           code_ == ErrorCode::NotFound || code_ == ErrorCode::NotUnique;
  }

private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code)
{
  switch (code) {
  case ErrorCode::CapExceeded: return "CapExceeded";
  case ErrorCode::NotNormal: return "NotNormal";
  case ErrorCode::NotSylow: return "NotSylow";
  case ErrorCode::NotAGroup: return "NotAGroup";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::MorphismOutsideR: return "MorphismOutsideR";
  case ErrorCode::DomainMismatch: return "DomainMismatch";
  case ErrorCode::NotSaturated: return "NotSaturated";
  case ErrorCode::NotStronglyClosed: return "NotStronglyClosed";
  case ErrorCode::NotConstrained: return "NotConstrained";
  case ErrorCode::NotCentralizing: return "NotCentralizing";
  case ErrorCode::NotRealized: return "NotRealized";
  case ErrorCode::NotFound: return "NotFound";
  case ErrorCode::NotUnique: return "NotUnique";
  case ErrorCode::VerificationFailed: return "VerificationFailed";
  case ErrorCode::TheoremViolation: return "TheoremViolation";
  case ErrorCode::FactorizationMissing: return "FactorizationMissing";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

} // namespace fusion
