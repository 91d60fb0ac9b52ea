#pragma once

#include <stdexcept>
#include <string>

namespace skewpc {

// Stable error classes. The numeric values are part of the CLI / C-API
// contract: every nonzero CLI exit code is exactly one of these.
enum class ErrorCode : int {
  Ok = 0,
  ParseError = 2,
  NotAChainRing = 3,
  SizeBoundExceeded = 4,
  NotBasicIrreducible = 5,
  NotAnAutomorphism = 6,
  RingMismatch = 7,
  NotAUnit = 8,
  NonUnitLeadingCoefficient = 9,
  NotMonic = 10,
  ModulusMismatch = 11,
  DegreeMismatch = 12,
  LengthMismatch = 13,
  IdentityAutomorphism = 14,
  NotCentral = 15,
  HypothesisViolated = 16,
  OutOfHypothesis = 17,
  BudgetExceeded = 18,
  BadArgument = 19,
  Internal = 20,
  Inconsistent = 21,
  VerifyFailed = 22,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace skewpc
