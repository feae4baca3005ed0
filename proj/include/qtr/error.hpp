#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtr {

enum class ErrorKind {
  SyntaxError,
  NonHomogeneous,
  FieldTooSmall,
  FieldMismatch,
  DegreeMismatch,
  NotDivisible,
  DivisionByZero,
  BothZero,
  ConstantInput,
  ZeroComponent,
  NotDivisibleType,
  ConditionViolated,
  NotReduced,
  DegreeIncompatible,
  NotApplicable,
  NotOnCurve,
  DegenerateDirection,
  InvalidProblem,
  InvalidInput,
  NoFamily,
  InsufficientParameters,
  BudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

/// All library failures surface as this exception; `kind()` is the stable
/// machine-readable part, `what()` carries a human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qtr
