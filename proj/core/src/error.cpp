#include "asymexp/error.hpp"

namespace asymexp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kEmptyState: return "EmptyState";
    case ErrorKind::kNonIntegralPath: return "NonIntegralPath";
    case ErrorKind::kInsufficientConvergedCoefficients: return "InsufficientConvergedCoefficients";
    case ErrorKind::kAllComparisonsDegenerate: return "AllComparisonsDegenerate";
    case ErrorKind::kDegeneratePole: return "DegeneratePole";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

bool Error::is_numerical() const noexcept {
  switch (kind_) {
    case ErrorKind::kEmptyState:
    case ErrorKind::kNonIntegralPath:
    case ErrorKind::kInsufficientConvergedCoefficients:
    case ErrorKind::kAllComparisonsDegenerate:
      return true;
    default:
      return false;
  }
}

}  // namespace asymexp
