#include "torux/error.hpp"

namespace torux {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::MismatchedRadicand: return "mismatched-radicand";
    case ErrorKind::InvalidDeterminant: return "invalid-determinant";
    case ErrorKind::NotHyperbolic: return "not-hyperbolic";
    case ErrorKind::RationalInput: return "rational-input";
    case ErrorKind::NotConjugate: return "not-conjugate";
    case ErrorKind::ParityViolation: return "parity-violation";
    case ErrorKind::DiscriminantMismatch: return "discriminant-mismatch";
    case ErrorKind::DetGNotOne: return "det-g-not-one";
    case ErrorKind::RationalSlope: return "rational-slope";
    case ErrorKind::DegenerateArc: return "degenerate-arc";
    case ErrorKind::ConditionIViolation: return "condition-I-violation";
    case ErrorKind::InvalidGraph: return "invalid-graph";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::WindowTooSmall: return "construction-window-too-small";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace torux
