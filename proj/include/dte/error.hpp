#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dte {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  NotAPrimitiveEmbedding,
  PoleAtMinusOne,
  PoleAtOne,
  NonUnitConstantTerm,
  OrderTooLow,
  InvalidCharacter,
  NotSquarefree,
  InternalInconsistency,
  OracleTooLarge,
  SingularFunctionalEquation,
  NotPadicallyConvergent,
  ResidualUndefined,
  NotConverged,
  OutsideConvergence,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Raised when a mathematical precondition fails. The CLI maps these to exit
// code 3 and prints error_name(kind()).
class MathError : public std::runtime_error {
public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace dte
