#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cwb {

enum class ErrorKind {
  ClosureExceedsLimit,
  NonUnitGenerator,
  InvalidParameter,
  NonUnitInput,
  NonUnitPoint,
  NonOrthogonalInput,
  NotClosed,
  NonCoprimeExponent,
  NotClifford,
  NotInGroup,
  NotASubalgebra,
  ZeroField,
  UnsupportedType,
  InvalidCoefficients,
  ZeroVector,
  ParseError,
  EmptyAmbient,
  ModelMismatch,
  UsageError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI and the tests can dispatch on it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cwb
