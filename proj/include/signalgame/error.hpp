#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace signalgame {

enum class ErrorKind {
  InvalidMatrix,
  NotPSD,
  NotPD,
  DimError,
  Infeasible,
  NotCheapTalk,
  NotSignaling,
  NotIsotropic,
  InvalidPower,
  InvalidScenario,
  TooLarge,
  ParseError,
  SimulationFailure,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotPD: return "NotPD";
    case ErrorKind::DimError: return "DimError";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NotCheapTalk: return "NotCheapTalk";
    case ErrorKind::NotSignaling: return "NotSignaling";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::InvalidPower: return "InvalidPower";
    case ErrorKind::InvalidScenario: return "InvalidScenario";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SimulationFailure: return "SimulationFailure";
  }
  return "Unknown";
}

}  // namespace signalgame
