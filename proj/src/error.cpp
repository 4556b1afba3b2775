#include "kinkline/error.hpp"

namespace kinkline {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAscending: return "NotAscending";
    case ErrorCode::NotABracket: return "NotABracket";
    case ErrorCode::DegenerateGap: return "DegenerateGap";
    case ErrorCode::NonPositiveGap: return "NonPositiveGap";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::BracketTooSmall: return "BracketTooSmall";
    case ErrorCode::TrialAtCenter: return "TrialAtCenter";
    case ErrorCode::InvariantBroken: return "InvariantBroken";
    case ErrorCode::ConditionFalseAtUpper: return "ConditionFalseAtUpper";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::ResampleLimitExceeded: return "ResampleLimitExceeded";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, int index)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

}  // namespace kinkline
