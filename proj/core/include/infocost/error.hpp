#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace infocost {

enum class ErrorCode {
  NonPositiveEntry,
  RowSumViolation,
  DimensionMismatch,
  StateSpaceMismatch,
  AlphaOutOfRange,
  PriorNotFullSupport,
  NotFullSupport,
  SolverFailure,
  NotConverged,
  POutOfRange,
  SigmaNonPositive,
  MissingValues,
  DuplicateValues,
  DuplicateLabels,
  TooFewStates,
  NegativeBeta,
  InvalidHypothesis,
  EpsilonOutOfRange,
  ZeroProbabilityOnSupport,
  DimensionTooLarge,
  IncompleteInput,
  InvalidArgument,
  ParseError,
  UnknownReproduction,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every validation failure in the library is reported as an `Error`
/// carrying the code of the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace infocost
