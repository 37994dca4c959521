#pragma once

#include <stdexcept>
#include <string>

namespace tph {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  PoleAtEvaluationPoint,
  RootOnCircle,
  NonConvergence,
  PoleOnCircle,
  SymbolDegenerateOnCircle,
  NotMatchingFunction,
  SignatureGuardFailed,
  IndexNotZero,
  NotMatchingPair,
  NotInKernel,
  NotRightInvertible,
  NotFredholmPair,
  ZeroVector,
  InvalidSymbol,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tph
