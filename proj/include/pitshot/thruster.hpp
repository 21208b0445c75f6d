#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pitshot::thruster {

/// Standard gravity used in Isp conversions, also off-Earth (Isp is defined
/// against g0).
constexpr double kStandardGravity = 9.80665;  // [m/s^2]

/// Thrust as a function of burn-relative time: either constant
/// (total_impulse / burn_duration) or a piecewise-linear tabulated curve.
class ThrustProfile {
 public:
  static ThrustProfile constant(double total_impulse, double burn_duration);
  /// Piecewise-linear curve over strictly increasing times starting at 0.
  static ThrustProfile tabulated(std::vector<double> times_s,
                                 std::vector<double> thrusts_n);

  /// Instantaneous thrust [N] at t seconds after ignition; 0 outside the burn.
  double thrust_at(double t_rel) const;
  /// Integral of the profile over the burn [N*s] (trapezoid for tabulated).
  double impulse() const;
  double duration() const { return duration_; }
  bool is_constant() const { return constant_level_ >= 0.0; }

 private:
  ThrustProfile() = default;
  double constant_level_ = -1.0;  // [N]; < 0 means tabulated
  double duration_ = 0.0;         // [s]
  std::vector<double> times_;     // [s]
  std::vector<double> thrusts_;   // [N]
};

/// Solid-rocket motor description.
struct ThrusterSpec {
  std::string name;            // catalog label, empty for inline specs
  double total_impulse = 0.0;  // J [N*s]
  double burn_duration = 0.0;  // delta t_J [s]
  ThrustProfile profile = ThrustProfile::constant(1.0, 1.0);
  double propellant_mass = 0.0;  // [kg], 0 when unknown
  double isp = 0.0;              // [s], 0 when unknown
  double motor_mass = 0.0;       // loaded motor mass [kg], bookkeeping only
};

/// Constant-profile motor. Propellant mass and Isp are optional bookkeeping.
ThrusterSpec make_constant_thruster(double total_impulse, double burn_duration,
                                    double propellant_mass = 0.0, double isp = 0.0,
                                    double motor_mass = 0.0, std::string name = "");

/// Motor built from a tabulated curve; total impulse and burn duration are
/// taken from the curve itself.
ThrusterSpec make_curve_thruster(ThrustProfile curve, double propellant_mass = 0.0,
                                 double isp = 0.0, double motor_mass = 0.0,
                                 std::string name = "");

/// Checks the spec invariants: profile integral within 0.1% of total_impulse,
/// and total_impulse within 0.5% of isp * g0 * propellant_mass when all three
/// are supplied.
void validate(const ThrusterSpec& spec);

/// Parses a two-column text table (time [s], thrust [N]); '#' starts a
/// comment. Times must be nonnegative and strictly increasing; a leading
/// (0, 0) point is implied if the table does not start at t = 0.
ThrustProfile parse_thrust_curve(std::istream& in);
ThrustProfile load_thrust_curve(const std::string& path);

}  // namespace pitshot::thruster
