#pragma once

#include <stdexcept>
#include <string>

namespace sct {

// Error taxonomy. Kind decides the CLI exit code: config/usage errors exit 2,
// domain errors (no trap, fit failure, ...) exit 1.
enum class ErrorKind {
  InvalidGeometry,
  BudgetExceeded,
  Configuration,
  Convergence,
  InvalidCorner,
  InvalidProbe,
  InvalidLoop,
  NoTrap,
  Saddle,
  Alignment,
  TypeMismatch,
  NoResonance,
  FitFailure,
  Integrator,
  Optimization,
  Parse,
  UnknownKey,
  Unit,
  Usage,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  // Usage/config errors are the caller's fault; everything else is a domain failure.
  bool is_usage() const {
    switch (kind_) {
      case ErrorKind::Configuration:
      case ErrorKind::Parse:
      case ErrorKind::UnknownKey:
      case ErrorKind::Unit:
      case ErrorKind::Usage:
      case ErrorKind::InvalidGeometry:
      case ErrorKind::Io:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace sct
