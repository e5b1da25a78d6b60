#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pniep {

enum class ErrorCode {
  InvalidSpectrum,
  NotConjugateClosed,
  ImaginaryResidue,
  NoConvergence,
  WrongCardinality,
  NotTraceZero,
  WrongSignPattern,
  NotRealizable,
  RadicandNegative,
  DivisionDegenerate,
  HypothesisFailed,
  NonNegativityViolated,
  SufficientConditionFailed,
  CompanionNegative,
  MatchingDegenerate,
  NoApplicableConstruction,
  PreconditionFailed,
  ShapeMismatch,
  NegativePerron,
  DimensionMismatch,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

/// One failed construction route, recorded by realize_auto.
struct Attempt {
  std::string method;
  ErrorCode code;
  std::string message;
};

class NoConstructionError : public Error {
 public:
  explicit NoConstructionError(std::vector<Attempt> attempts);

  const std::vector<Attempt>& attempts() const noexcept { return attempts_; }

 private:
  std::vector<Attempt> attempts_;
};

}  // namespace pniep
