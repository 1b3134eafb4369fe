#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asymexp {

enum class ErrorKind {
  kInvalidArgument,
  kEmptyState,
  kNonIntegralPath,
  kInsufficientConvergedCoefficients,
  kAllComparisonsDegenerate,
  kDegeneratePole,
  kParseError,
  kIoError,
};

std::string_view to_string(ErrorKind kind);

/// Failure raised by every asymexp operation. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for violations of the numerical contract (bad step, too few
  /// converged coefficients, ...), false for malformed input.
  bool is_numerical() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace asymexp
