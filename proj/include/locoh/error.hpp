#pragma once

#include <stdexcept>
#include <string>

namespace locoh {

enum class ErrorKind {
  DomainMismatch,
  NotSquare,
  LengthMismatch,
  NotHomogeneous,
  RingMismatch,
  DegreeTooSmall,
  SizeTooLarge,
  TooManyMinors,
  NotAField,
  GradingViolation,
  NotFiniteLength,
  InsufficientData,
  OutOfRange,
  RouteDisagreement,
  TheoremViolation,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the polynomial reader; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace locoh
