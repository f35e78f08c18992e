#include "infocost/error.hpp"

namespace infocost {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::RowSumViolation: return "RowSumViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::StateSpaceMismatch: return "StateSpaceMismatch";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::PriorNotFullSupport: return "PriorNotFullSupport";
    case ErrorCode::NotFullSupport: return "NotFullSupport";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::POutOfRange: return "POutOfRange";
    case ErrorCode::SigmaNonPositive: return "SigmaNonPositive";
    case ErrorCode::MissingValues: return "MissingValues";
    case ErrorCode::DuplicateValues: return "DuplicateValues";
    case ErrorCode::DuplicateLabels: return "DuplicateLabels";
    case ErrorCode::TooFewStates: return "TooFewStates";
    case ErrorCode::NegativeBeta: return "NegativeBeta";
    case ErrorCode::InvalidHypothesis: return "InvalidHypothesis";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::ZeroProbabilityOnSupport: return "ZeroProbabilityOnSupport";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::IncompleteInput: return "IncompleteInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownReproduction: return "UnknownReproduction";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace infocost
