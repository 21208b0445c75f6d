#pragma once

#include <Eigen/Core>

#include <numbers>

namespace pitshot::ballistics {

constexpr double kPi = std::numbers::pi;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Uniform gravity field of the target body.
struct BodyEnvironment {
  double g = 1.625;  // gravitational acceleration [m/s^2]

  static BodyEnvironment moon() { return {1.625}; }
  static BodyEnvironment mars() { return {3.71}; }
};

/// Target pit relative to the launch point.
struct PitGeometry {
  double d = 5.0;   // horizontal distance to the pit opening [m], > 0
  double h = 80.0;  // pit depth below the launch plane [m], >= 0
};

/// Physical properties of the spherical bot and the launcher wheels.
struct BotProperties {
  double m = 1.0;        // bot mass [kg]
  double r_b = 0.04;     // bot radius [m]
  double r_w = 0.01325;  // launcher wheel radius [m]
};

/// Launch state produced by the spring launcher.
struct LaunchParams {
  double v0 = 0.0;     // launch speed [m/s]
  double theta = 0.0;  // launch elevation angle [rad], in (0, pi/2)
  double k = 4012.0;   // spring stiffness [N/m]
  double x = 0.0;      // spring compression [m]
};

/// Point on a trajectory, inertial frame E. Closed-form flight is planar, so
/// the y components are exactly zero.
struct TrajectorySample {
  double t = 0.0;        // time since launch [s]
  Eigen::Vector3d r{0, 0, 0};  // position [m]
  Eigen::Vector3d v{0, 0, 0};  // velocity [m/s]
};

void validate(const BodyEnvironment& env);
void validate(const PitGeometry& pit);
void validate(const BotProperties& bot);

/// Launch speed that lands the bot exactly d downrange on the launch plane:
/// v0 = sqrt(d*g / (2 sin(theta) cos(theta))).
double required_launch_speed(double d, double theta, const BodyEnvironment& env);

/// Spring compression storing the launch kinetic energy: x = v0 * sqrt(m/k).
double spring_compression(double v0, const BotProperties& bot, double k);

/// LaunchParams with the compression derived from the requested speed.
LaunchParams make_launch_params(double v0, double theta, const BotProperties& bot,
                                double k = 4012.0);

/// Time at which the bot returns to the launch plane: t_d = 2 v0 sin(theta) / g.
double time_to_range(double v0, double theta, const BodyEnvironment& env);

/// Time at which the bot reaches the pit floor z = -h:
/// t_f = (sqrt(2 g h + v0^2 sin^2(theta)) + v0 sin(theta)) / g.
double flight_time_to_floor(double v0, double theta, double h,
                            const BodyEnvironment& env);

/// Closed-form unpowered state at time t since launch.
TrajectorySample state_at(double t, double v0, double theta,
                          const BodyEnvironment& env);

/// Velocity the instant before the landing burn, and its magnitude
/// v_f = sqrt(v0^2 + 2 g h).
struct PreimpactVelocity {
  Eigen::Vector3d v;  // [m/s], (v0 cos(theta), 0, -sqrt(2 g h + v0^2 sin^2(theta)))
  double speed;       // [m/s]
};
PreimpactVelocity preimpact_velocity(double v0, double theta, double h,
                                     const BodyEnvironment& env);

}  // namespace pitshot::ballistics
