#include <disres/error.hpp>

namespace disres {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::FactorsNotCoprime: return "FactorsNotCoprime";
    case ErrorCode::ProductMismatch: return "ProductMismatch";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::ConstantDenominator: return "ConstantDenominator";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::NonzeroPolynomialPart: return "NonzeroPolynomialPart";
    case ErrorCode::NonIntegerResidues: return "NonIntegerResidues";
    case ErrorCode::NonConstantEpsilon: return "NonConstantEpsilon";
    case ErrorCode::ZeroEpsilon: return "ZeroEpsilon";
    case ErrorCode::FactorizationBound: return "FactorizationBound";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

ErrorKind error_kind(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
      return ErrorKind::Parse;
    case ErrorCode::NonConstantEpsilon:
    case ErrorCode::InternalConsistency:
      return ErrorKind::Internal;
    default:
      return ErrorKind::Domain;
  }
}

}  // namespace disres
