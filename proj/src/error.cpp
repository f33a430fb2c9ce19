#include "cwb/error.hpp"

namespace cwb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ClosureExceedsLimit: return "ClosureExceedsLimit";
    case ErrorKind::NonUnitGenerator: return "NonUnitGenerator";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NonUnitInput: return "NonUnitInput";
    case ErrorKind::NonUnitPoint: return "NonUnitPoint";
    case ErrorKind::NonOrthogonalInput: return "NonOrthogonalInput";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NonCoprimeExponent: return "NonCoprimeExponent";
    case ErrorKind::NotClifford: return "NotClifford";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::ZeroField: return "ZeroField";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::InvalidCoefficients: return "InvalidCoefficients";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyAmbient: return "EmptyAmbient";
    case ErrorKind::ModelMismatch: return "ModelMismatch";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace cwb
