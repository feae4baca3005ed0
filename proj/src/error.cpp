#include "qtr/error.hpp"

namespace qtr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::ZeroComponent: return "ZeroComponent";
    case ErrorKind::NotDivisibleType: return "NotDivisibleType";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::DegreeIncompatible: return "DegreeIncompatible";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::DegenerateDirection: return "DegenerateDirection";
    case ErrorKind::InvalidProblem: return "InvalidProblem";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NoFamily: return "NoFamily";
    case ErrorKind::InsufficientParameters: return "InsufficientParameters";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace qtr
