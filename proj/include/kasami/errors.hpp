#pragma once

#include <stdexcept>
#include <string>

namespace kasami {

enum class Errc {
  NotOddPrime,
  KEqualsM,
  KOutOfRange,
  TNotDividingD,
  DegreeOverflow,
  NotInSubfield,
  NonDividingDegrees,
  FactorizationLimitExceeded,
  LengthMismatch,
  UnrecognizedValue,
  AlphaNotInSubfield,
  ZeroCoefficient,
  ZeroPair,
  Order3NotCovered,
  MissingGamma,
  UnexpectedGamma,
  CoefficientsNotInSubfield,
  BudgetExceeded,
  MassMismatch,
  TauOutOfRange,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace kasami
