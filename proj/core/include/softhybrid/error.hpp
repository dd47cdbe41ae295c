#pragma once

#include <stdexcept>
#include <string>

namespace softhybrid {

// Every failure the library reports, one class per contract violation.
enum class ErrorKind {
  UnknownLabel,
  GradeOutOfRange,
  VariantViolation,
  SupportViolation,
  MixedSpaces,
  DimensionMismatch,
  EmptyInput,
  SyntaxError,
  SchemaError,
  DuplicateName,
  UnknownIdentity,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  // The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace softhybrid
