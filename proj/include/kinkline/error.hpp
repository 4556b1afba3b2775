#pragma once

#include <stdexcept>
#include <string>

namespace kinkline {

enum class ErrorCode {
  NotAscending,
  NotABracket,
  DegenerateGap,
  NonPositiveGap,
  CoincidentPoints,
  BracketTooSmall,
  TrialAtCenter,
  InvariantBroken,
  ConditionFalseAtUpper,
  UnknownFunction,
  OutOfDomain,
  ResampleLimitExceeded,
  InvalidConfig,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library. `index()` is the offending
/// position for NotAscending / DegenerateGap and -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, int index = -1);

  ErrorCode code() const noexcept { return code_; }
  int index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  int index_;
};

}  // namespace kinkline
