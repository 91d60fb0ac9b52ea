#include "skewpc/errors.hpp"

namespace skewpc {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAChainRing: return "NotAChainRing";
    case ErrorCode::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorCode::NotBasicIrreducible: return "NotBasicIrreducible";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IdentityAutomorphism: return "IdentityAutomorphism";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::OutOfHypothesis: return "OutOfHypothesis";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::Internal: return "Internal";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::VerifyFailed: return "VerifyFailed";
  }
  return "?";
}

}  // namespace skewpc
