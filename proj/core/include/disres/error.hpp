#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace disres {

enum class ErrorCode {
  // polynomial kernel
  DivisionByZeroPoly,
  BothZero,
  ZeroInput,
  DegreeTooSmall,
  // rational functions
  ZeroDenominator,
  NotProper,
  FactorsNotCoprime,
  ProductMismatch,
  NotSquarefree,
  ConstantDenominator,
  NotPolynomial,
  // summability / galois
  NonzeroPolynomialPart,
  NonIntegerResidues,
  NonConstantEpsilon,
  ZeroEpsilon,
  FactorizationBound,
  // expression input
  SyntaxError,
  UnknownVariable,
  // self-checks that should never fire
  InternalConsistency,
};

enum class ErrorKind { Parse, Domain, Internal };

std::string_view error_name(ErrorCode code) noexcept;
ErrorKind error_kind(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return error_kind(code_); }

 private:
  ErrorCode code_;
};

/// Error raised by the expression parser; carries the byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& detail, std::size_t offset)
      : Error(ErrorCode::SyntaxError, detail + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised by the tuple-valued operations; `index` is the 0-based position of the
/// offending input.
class IndexedError : public Error {
 public:
  IndexedError(ErrorCode code, std::size_t index, const std::string& detail)
      : Error(code, "input " + std::to_string(index + 1) + ": " + detail), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace disres
