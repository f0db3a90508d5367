#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bchcert {

enum class ErrorCode {
  NotPrime,
  NotPrimePower,
  FieldTooLarge,
  NotADivisor,
  NotASubfield,
  FieldMismatch,
  DivisionByZeroPolynomial,
  ZeroPolynomial,
  NotSeparable,
  NotCoprime,
  InvalidDelta,
  OutOfLemmaRange,
  NotNarrowSense,
  LengthMismatch,
  DuplicatePoint,
  ZeroPoint,
  PointIsOne,
  DuplicateLocator,
  CriterionFailed,
  DeltaOutOfRange,
  BadModulus,
  BadParameters,
  NormCheckFailed,
  TooLarge,
  BudgetExceeded,
  DegenerateCode,
  BoundViolated,
  RowMismatch,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when a certificate's S_j check fails; `index` is the 1-based j.
class CriterionFailed : public Error {
 public:
  CriterionFailed(int index, const std::string& what)
      : Error(ErrorCode::CriterionFailed, what), index_(index) {}

  int index() const noexcept { return index_; }

 private:
  int index_;
};

}  // namespace bchcert
