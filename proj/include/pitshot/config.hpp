#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pitshot/ballistics.hpp"
#include "pitshot/thruster.hpp"

namespace pitshot::config {

/// One fully validated run description, parsed from a flat key=value file.
/// Parsing is total: any unknown key, malformed value, or range violation
/// raises ConfigError (naming the line, key, and value) and nothing is
/// applied.
struct RunConfig {
  // environment
  double g = 1.625;  // [m/s^2]; from body=moon|mars or an explicit g=...

  // pit (required keys)
  double d = 0.0;  // [m]
  double h = 0.0;  // [m]

  // bot
  double m = 1.0;        // [kg]
  double r_b = 0.04;     // [m]
  double r_w = 0.01325;  // [m]

  // launch
  double theta_deg = 45.0;
  double k = 4012.0;             // spring stiffness [N/m]
  std::optional<int> rotations;  // n=auto by default
  double max_wheel_rate = 300.0; // [rad/s]

  // thruster: a catalog name, or an inline spec, or a curve file
  std::string thruster_name;
  std::optional<double> thruster_impulse;     // [N*s]
  std::optional<double> thruster_burn;        // [s]
  std::optional<double> thruster_propellant;  // [kg]
  std::optional<double> thruster_isp;         // [s]
  std::string thruster_curve;                 // path to a two-column table

  // simulation
  double dt = 1e-3;                 // [s]
  std::optional<double> ignition;   // [s]; ignition=auto by default
  bool variable_mass = false;
  double max_time_factor = 10.0;
  double touchdown_threshold = 2.0; // [m/s]

  // monte carlo
  double sigma_w = 0.0;  // [rad/s]
  int trials = 1000;
  std::uint64_t seed = 0;

  std::string out_dir = ".";
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

ballistics::BodyEnvironment environment(const RunConfig& cfg);
ballistics::PitGeometry pit(const RunConfig& cfg);
ballistics::BotProperties bot(const RunConfig& cfg);
double theta_rad(const RunConfig& cfg);

/// Catalog entry, inline constant spec, or tabulated curve file.
thruster::ThrusterSpec resolve_thruster(const RunConfig& cfg);

}  // namespace pitshot::config
