#include "tph/errors.hpp"

namespace tph {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorCode::RootOnCircle: return "RootOnCircle";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::PoleOnCircle: return "PoleOnCircle";
    case ErrorCode::SymbolDegenerateOnCircle: return "SymbolDegenerateOnCircle";
    case ErrorCode::NotMatchingFunction: return "NotMatchingFunction";
    case ErrorCode::SignatureGuardFailed: return "SignatureGuardFailed";
    case ErrorCode::IndexNotZero: return "IndexNotZero";
    case ErrorCode::NotMatchingPair: return "NotMatchingPair";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::NotRightInvertible: return "NotRightInvertible";
    case ErrorCode::NotFredholmPair: return "NotFredholmPair";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidSymbol: return "InvalidSymbol";
  }
  return "Unknown";
}

}  // namespace tph
