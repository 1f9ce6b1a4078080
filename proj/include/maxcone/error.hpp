#pragma once

#include <stdexcept>
#include <string>

namespace maxcone {

enum class ErrorCode {
  DimensionMismatch,
  Divergent,      // lambda(A) > 1 where a Kleene star was requested
  NotDefinite,    // lambda(A) != 1 where a definite matrix is required
  Precondition,   // generic violated precondition (zero vector, non-positive input, ...)
  NotMember,
  ZeroPermanent,
  CapExceeded,
  Indeterminate,
  Unsupported,
  Parse,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::Divergent: return "divergent";
    case ErrorCode::NotDefinite: return "not_definite";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::NotMember: return "not_member";
    case ErrorCode::ZeroPermanent: return "zero_permanent";
    case ErrorCode::CapExceeded: return "cap_exceeded";
    case ErrorCode::Indeterminate: return "indeterminate";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace maxcone
