#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lagloci {

enum class ErrorCode {
  DivisionByZero,
  ParseError,
  OrderMismatch,
  OrderExhausted,
  NotAUnit,
  SingularAtOrigin,
  RankDeficientAtOrigin,
  InconsistentSystem,
  ZeroCubic,
  NotDegenerate,
  DegenerateFiber,
  SolutionSpaceNotRank2,
  NotAnIsomorphism,
  WrongKappaImage,
  RankMismatch,
  SingularGroupElement,
  NotSiegel,
  NotImmersed,
  InvalidGerm,
  NotNullCurve,
  NoAdmissibleChart,
  E0ConditionFails,
  NotClosed,
  VerificationFailed,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (tests, the CLI exit-code mapping) can branch on the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lagloci
