#include "softhybrid/error.hpp"

namespace softhybrid {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::GradeOutOfRange: return "GradeOutOfRange";
    case ErrorKind::VariantViolation: return "VariantViolation";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::MixedSpaces: return "MixedSpaces";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
  }
  return "Error";
}

}  // namespace softhybrid
