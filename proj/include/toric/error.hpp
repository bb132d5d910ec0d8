#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorKind {
  RankDeficient,
  DimensionMismatch,
  ZeroVector,
  NotPointed,
  NonGenericOmega,
  LimitExceeded,
  GuardViolated,
  NegativeEntries,
  NotACircuit,
  InvalidArgument,
  Overflow,
  Parse,
  Internal,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NonGenericOmega: return "NonGenericOmega";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::GuardViolated: return "GuardViolated";
    case ErrorKind::NegativeEntries: return "NegativeEntries";
    case ErrorKind::NotACircuit: return "NotACircuit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` lets callers (the CLI in
/// particular) map failures onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace toric
