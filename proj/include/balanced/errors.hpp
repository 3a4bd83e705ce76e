#ifndef BALANCED_ERRORS_HPP
#define BALANCED_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace balanced {

enum class ErrorCode {
  ZeroVector,
  InvalidSize,
  DuplicateArgument,
  OddM,
  NotBalanced,
  NotUniform,
  AmbiguousPairing,
  InconsistentConstants,
  RootCountMismatch,
  ClosureViolation,
  SingularFrame,
  NotNormalized,
  NoGridMatch,
  DegenerateStep,
  ResidualTooLarge,
  BudgetExceeded,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::DuplicateArgument: return "DuplicateArgument";
    case ErrorCode::OddM: return "OddM";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::AmbiguousPairing: return "AmbiguousPairing";
    case ErrorCode::InconsistentConstants: return "InconsistentConstants";
    case ErrorCode::RootCountMismatch: return "RootCountMismatch";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::SingularFrame: return "SingularFrame";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NoGridMatch: return "NoGridMatch";
    case ErrorCode::DegenerateStep: return "DegenerateStep";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
/// `index()` holds the offending index when one exists (k for
/// InconsistentConstants, i for a NotBalanced witness), else -1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, long index = -1)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        index_(index),
        message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// what() without the code prefix.
  const std::string& message() const noexcept { return message_; }
  long index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  long index_;
  std::string message_;
};

}  // namespace balanced

#endif  // BALANCED_ERRORS_HPP
