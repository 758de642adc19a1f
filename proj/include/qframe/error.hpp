#pragma once

#include <stdexcept>
#include <string>

namespace qframe {

enum class ErrorKind {
  DimensionMismatch,
  ZeroDivision,
  Singular,
  NotHermitian,
  NotPositive,
  NotAFrame,
  InvalidWeight,
  NotAFrameOnSubspace,
  HypothesisViolated,
  InvalidParams,
  ConditionViolated,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::InvalidWeight: return "InvalidWeight";
    case ErrorKind::NotAFrameOnSubspace: return "NotAFrameOnSubspace";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace qframe
