#include "bchcert/error.hpp"

namespace bchcert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::InvalidDelta: return "InvalidDelta";
    case ErrorCode::OutOfLemmaRange: return "OutOfLemmaRange";
    case ErrorCode::NotNarrowSense: return "NotNarrowSense";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::PointIsOne: return "PointIsOne";
    case ErrorCode::DuplicateLocator: return "DuplicateLocator";
    case ErrorCode::CriterionFailed: return "CriterionFailed";
    case ErrorCode::DeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NormCheckFailed: return "NormCheckFailed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DegenerateCode: return "DegenerateCode";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::RowMismatch: return "RowMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace bchcert
