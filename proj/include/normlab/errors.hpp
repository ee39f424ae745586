#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace normlab {

// Machine-readable error codes surfaced through the CLI as
// {"error": {"code": ..., "detail": ...}}.
enum class ErrorCode {
  LabelNotFound,
  DuplicateLabel,
  DimMismatch,
  FieldMismatch,
  InvalidNorm,
  ZeroVector,
  Unsupported,
  NumericalFailure,
  NotNewDirection,
  InvalidBound,
  AtomOffSphere,
  UndefinedAtPoint,
  SpecMismatch,
  InvalidSample,
  TooLarge,
  GeneratorExhausted,
  MalformedInput,
  FileNotFound,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::LabelNotFound:      return "LabelNotFound";
    case ErrorCode::DuplicateLabel:     return "DuplicateLabel";
    case ErrorCode::DimMismatch:        return "DimMismatch";
    case ErrorCode::FieldMismatch:      return "FieldMismatch";
    case ErrorCode::InvalidNorm:        return "InvalidNorm";
    case ErrorCode::ZeroVector:         return "ZeroVector";
    case ErrorCode::Unsupported:        return "Unsupported";
    case ErrorCode::NumericalFailure:   return "NumericalFailure";
    case ErrorCode::NotNewDirection:    return "NotNewDirection";
    case ErrorCode::InvalidBound:       return "InvalidBound";
    case ErrorCode::AtomOffSphere:      return "AtomOffSphere";
    case ErrorCode::UndefinedAtPoint:   return "UndefinedAtPoint";
    case ErrorCode::SpecMismatch:       return "SpecMismatch";
    case ErrorCode::InvalidSample:      return "InvalidSample";
    case ErrorCode::TooLarge:           return "TooLarge";
    case ErrorCode::GeneratorExhausted: return "GeneratorExhausted";
    case ErrorCode::MalformedInput:     return "MalformedInput";
    case ErrorCode::FileNotFound:       return "FileNotFound";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool cond, ErrorCode code, const std::string& detail) {
  if (!cond) fail(code, detail);
}

}  // namespace normlab
