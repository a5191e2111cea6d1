#pragma once

#include <stdexcept>
#include <string>

namespace springerkit {

enum class ErrorKind {
  NotPrime,
  TooLarge,
  FieldMismatch,
  NotSquare,
  DimensionMismatch,
  NotAGroup,
  ClosureTooLarge,
  IndexOutOfRange,
  NotNormal,
  NotARepresentation,
  SingularMatrix,
  OwnerMismatch,
  DimensionCap,
  NotSemisimple,
  NotAssociative,
  NoUnit,
  SubgroupMismatch,
  NotSimple,
  MeataxeFailure,
  ParseError,
  ValidationError,
  ExpectationMismatch,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure surfaced by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace springerkit
