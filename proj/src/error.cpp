#include "dte/error.hpp"

namespace dte {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotAPrimitiveEmbedding: return "NotAPrimitiveEmbedding";
    case ErrorKind::PoleAtMinusOne: return "PoleAtMinusOne";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::OrderTooLow: return "OrderTooLow";
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    case ErrorKind::SingularFunctionalEquation: return "SingularFunctionalEquation";
    case ErrorKind::NotPadicallyConvergent: return "NotPadicallyConvergent";
    case ErrorKind::ResidualUndefined: return "ResidualUndefined";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::OutsideConvergence: return "OutsideConvergence";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

} // namespace dte
