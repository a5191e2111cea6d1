#include "springerkit/error.hpp"

namespace springerkit {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotARepresentation: return "NotARepresentation";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::OwnerMismatch: return "OwnerMismatch";
    case ErrorKind::DimensionCap: return "DimensionCap";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoUnit: return "NoUnit";
    case ErrorKind::SubgroupMismatch: return "SubgroupMismatch";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::MeataxeFailure: return "MeataxeFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::ExpectationMismatch: return "ExpectationMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace springerkit
