#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

enum class ErrorCode {
  DivisionByZero,
  PoleAtPoint,
  SingularSystem,
  ZeroCharge,
  PoleOrderMismatch,
  DimensionTooSmall,
  UnsupportedForOracle,
  NotPositiveCase,
  NotOnSigma,
  ZeroNorm,
  WeightTooLarge,
  TailTooShort,
  LinearFactor,
  ParameterRange,
  Validation,
  Parse,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ZeroCharge: return "ZeroCharge";
    case ErrorCode::PoleOrderMismatch: return "PoleOrderMismatch";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::UnsupportedForOracle: return "UnsupportedForOracle";
    case ErrorCode::NotPositiveCase: return "NotPositiveCase";
    case ErrorCode::NotOnSigma: return "NotOnSigma";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::WeightTooLarge: return "WeightTooLarge";
    case ErrorCode::TailTooShort: return "TailTooShort";
    case ErrorCode::LinearFactor: return "LinearFactor";
    case ErrorCode::ParameterRange: return "ParameterRange";
    case ErrorCode::Validation: return "Validation";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // true for errors that mean "the input text is malformed" rather than
  // "the input describes an invalid object"
  bool is_parse() const noexcept { return code_ == ErrorCode::Parse; }

 private:
  ErrorCode code_;
};

}  // namespace kstab
