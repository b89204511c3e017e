#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadchain {

enum class ErrorKind {
  NotDivisible,
  DivisorZero,
  BothZero,
  Zero,
  FactorizationTimeout,
  TooManyDivisors,
  NotAFactor,
  StepBudgetExceeded,
  CentersDiffer,
  SystemsDiffer,
  InconsistentProduct,
  HypothesisFailed,
  UnboundedRun,
  InvalidArgument,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivisorZero: return "DivisorZero";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::Zero: return "Zero";
    case ErrorKind::FactorizationTimeout: return "FactorizationTimeout";
    case ErrorKind::TooManyDivisors: return "TooManyDivisors";
    case ErrorKind::NotAFactor: return "NotAFactor";
    case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorKind::CentersDiffer: return "CentersDiffer";
    case ErrorKind::SystemsDiffer: return "SystemsDiffer";
    case ErrorKind::InconsistentProduct: return "InconsistentProduct";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::UnboundedRun: return "UnboundedRun";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace quadchain
