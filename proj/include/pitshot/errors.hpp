#pragma once

#include <stdexcept>
#include <string>

namespace pitshot {

/// Raised by config parsing/validation. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a mission cannot be planned (e.g. required impulse exceeds
/// the motor rating). CLI exit code 3.
class PlanningError : public std::runtime_error {
 public:
  explicit PlanningError(const std::string& msg)
      : std::runtime_error(msg), required_impulse(0), available_impulse(0) {}
  PlanningError(const std::string& msg, double required, double available)
      : std::runtime_error(msg),
        required_impulse(required),
        available_impulse(available) {}

  double required_impulse;   // [N*s]
  double available_impulse;  // [N*s]
};

/// Raised by the numerical simulator (no floor crossing, unreachable soft
/// landing, invalid integration setup). CLI exit code 4.
class SimulationError : public std::runtime_error {
 public:
  explicit SimulationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pitshot
