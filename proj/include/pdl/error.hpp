#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdl {

enum class ErrorKind {
  Infeasible,
  NumericalFailure,
  SingularMass,
  SingularImpact,
  DegenerateParams,
  RelativeDegreeViolation,
  ControllerFailure,
  TooShort,
  EmptyDataset,
  DivergedLoss,
  ConfigError,
  MismatchedConfigs,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Exception type used throughout the library. The kind lets callers (and the
/// CLI) distinguish recoverable conditions such as an infeasible QP from
/// programming errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::SingularMass: return "SingularMass";
    case ErrorKind::SingularImpact: return "SingularImpact";
    case ErrorKind::DegenerateParams: return "DegenerateParams";
    case ErrorKind::RelativeDegreeViolation: return "RelativeDegreeViolation";
    case ErrorKind::ControllerFailure: return "ControllerFailure";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::DivergedLoss: return "DivergedLoss";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::MismatchedConfigs: return "MismatchedConfigs";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pdl
