#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smallclass {

enum class ErrorKind {
  NotLatinSquare,
  NoIdentity,
  MissingInverse,
  NotAssociative,
  OrderCapExceeded,
  ParameterOutOfRange,
  ParseError,
  UnknownFamily,
  OracleCapExceeded,
  IoError,
  FormatError,
  ValidationError,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and meant for
/// programmatic dispatch; `what()` carries the offending element or position.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace smallclass
