#include "locoh/error.hpp"

namespace locoh {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::TooManyMinors: return "TooManyMinors";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::NotFiniteLength: return "NotFiniteLength";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::RouteDisagreement: return "RouteDisagreement";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(ErrorKind::ParseError,
            message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

}  // namespace locoh
