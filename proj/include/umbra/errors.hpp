#pragma once

#include <stdexcept>
#include <string>

namespace umbra {

enum class ErrorKind {
  TagMismatch,
  DivisionByZero,
  NonInvertibleConstantTerm,
  NonzeroConstantTerm,
  RepeatedNodes,
  InvalidSequenceSpec,
  ZeroFactorial,
  IndexOutOfRange,
  SingularSystem,
  InsufficientTerms,
  NotConvergent,
  InvalidParameter,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::TagMismatch: return "TagMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::RepeatedNodes: return "RepeatedNodes";
    case ErrorKind::InvalidSequenceSpec: return "InvalidSequenceSpec";
    case ErrorKind::ZeroFactorial: return "ZeroFactorial";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::InsufficientTerms: return "InsufficientTerms";
    case ErrorKind::NotConvergent: return "NotConvergent";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace umbra
