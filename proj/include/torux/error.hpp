#pragma once

#include <stdexcept>
#include <string>

namespace torux {

enum class ErrorKind {
  DivisionByZero,
  MismatchedRadicand,
  InvalidDeterminant,
  NotHyperbolic,
  RationalInput,
  NotConjugate,
  ParityViolation,
  DiscriminantMismatch,
  DetGNotOne,
  RationalSlope,
  DegenerateArc,
  ConditionIViolation,
  InvalidGraph,
  OutOfRange,
  WindowTooSmall,
  Parse,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& what) {
  throw Error(k, what);
}

}  // namespace torux
