#include "pniep/error.hpp"

namespace pniep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::NotConjugateClosed: return "NotConjugateClosed";
    case ErrorCode::ImaginaryResidue: return "ImaginaryResidue";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::NotTraceZero: return "NotTraceZero";
    case ErrorCode::WrongSignPattern: return "WrongSignPattern";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::RadicandNegative: return "RadicandNegative";
    case ErrorCode::DivisionDegenerate: return "DivisionDegenerate";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NonNegativityViolated: return "NonNegativityViolated";
    case ErrorCode::SufficientConditionFailed: return "SufficientConditionFailed";
    case ErrorCode::CompanionNegative: return "CompanionNegative";
    case ErrorCode::MatchingDegenerate: return "MatchingDegenerate";
    case ErrorCode::NoApplicableConstruction: return "NoApplicableConstruction";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NegativePerron: return "NegativePerron";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

namespace {

std::string summarize(const std::vector<Attempt>& attempts) {
  std::string out = "no construction applies";
  for (const auto& a : attempts) {
    out += "; " + a.method + " -> " + std::string(to_string(a.code));
  }
  return out;
}

}  // namespace

NoConstructionError::NoConstructionError(std::vector<Attempt> attempts)
    : Error(ErrorCode::NoApplicableConstruction, summarize(attempts)),
      attempts_(std::move(attempts)) {}

}  // namespace pniep
