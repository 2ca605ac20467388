#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matreal {

enum class ErrorKind {
  AxiomViolation,
  EmptyGroundSet,
  OutOfRange,
  NonIndependentContraction,
  InvalidHypergraph,
  NotPaving,
  TooLarge,
  FamilyUnavailable,
  InvalidOrdering,
  DimensionMismatch,
  StepOverflow,
  StepNotOne,
  DegreeTooHigh,
  SymbolicDegeneracy,
  RetryExhausted,
  NotInductivelyConnected,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module; `kind` names the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace matreal
