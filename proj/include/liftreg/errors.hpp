#pragma once

#include <stdexcept>
#include <string>

namespace liftreg {

enum class ErrorCode {
  kParse,
  kSingular,
  kZeroVector,
  kNotPrimitive,
  kBoxTooLarge,
  kEnumerationCap,
  kCapExceeded,
  kDegenerate,
  kNotSimplicial,
  kNotSupporting,
  kUnbounded,
  kFNotInterior,
  kFOutside,
  kNotOnFacet,
  kNotLatticeFree,
  kMultipleLiftings,
  kHypothesisViolated,
  kInvalidDelta,
  kNotType3,
  kValidationFailed,
  kSliceNotSimplex,
  kDimensionUnsupported,
  kNotFound,
  kInternal,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }

  /// True for resource-cap failures (CLI exit code 3); false for
  /// validation/usage failures (CLI exit code 2).
  bool is_cap_error() const {
    return code_ == ErrorCode::kBoxTooLarge ||
           code_ == ErrorCode::kEnumerationCap ||
           code_ == ErrorCode::kCapExceeded;
  }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace liftreg
