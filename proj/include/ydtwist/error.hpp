#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ydtwist {

enum class ErrorCode {
  InvalidParams,
  DivisionByZero,
  ContextMismatch,
  IncompatibleParams,
  UnsupportedEll,
  FormulaNotApplicable,
  InternalConsistency,
};

/// Stable machine-readable identifier, used by the CLI error objects.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ydtwist
