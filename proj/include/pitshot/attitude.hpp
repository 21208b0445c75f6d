#pragma once

#include <Eigen/Core>

#include "pitshot/ballistics.hpp"

namespace pitshot::attitude {

using ballistics::BotProperties;

/// Unit vector in the inertial frame. Normalized on construction; zero-length
/// input is a domain error.
class Direction3 {
 public:
  static Direction3 from(const Eigen::Vector3d& v);
  static Direction3 from(double x, double y, double z) {
    return from(Eigen::Vector3d{x, y, z});
  }

  const Eigen::Vector3d& vec() const { return v_; }
  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }

 private:
  explicit Direction3(const Eigen::Vector3d& v) : v_(v) {}
  Eigen::Vector3d v_;
};

/// Complete spin prescription for one launch.
///
/// The bot spins about e_o (the pre-impact velocity axis); the thrust body
/// axis rides a cone of half-angle phi about it, starting at the generator
/// e_d. Over whole rotations the transverse thrust components cancel and the
/// net impulse along e_o is J cos(phi).
struct SpinPlan {
  Direction3 e_o;  // optimal impulse axis (pre-impact velocity direction)
  Direction3 e_d;  // thrust-axis direction at ignition, e_d = R1(phi) e_o
  double phi;      // precession half-cone angle [rad], in [0, pi/2]
  double w_f;      // total spin magnitude [rad/s]
  double w_s;      // spin-stabilization component [rad/s]
  double w_i;      // precession component [rad/s]
  int n;           // whole thrust-axis rotations during the burn, >= 1
  double w0;       // launcher wheel 0 rate [rad/s]
  double w1;       // launcher wheel 1 rate [rad/s] (opposite sign convention)

  /// Nominal spin vector imparted by the launcher, inertial frame.
  Eigen::Vector3d nominal_spin() const { return w_f * e_o.vec(); }
};

/// Transverse spin-noise model: actual spin w_a = w_f e_d + w_e e_t with
/// w_e ~ Normal(0, sigma_w).
struct NoiseModel {
  double sigma_w;  // std dev of the transverse spin error [rad/s], >= 0
  Direction3 e_t;  // tangent direction of the error, orthogonal to e_d
};

/// Direction of the velocity the instant before the burn (Eq. of the optimal
/// impulse axis): e_o = v(t_f) / ||v(t_f)||.
Direction3 optimal_impulse_axis(const Eigen::Vector3d& v_tf);

/// y-axis rotation matrix [[c,0,-s],[0,1,0],[s,0,c]]; used both to align the
/// thrust axis with e_o and to tilt it by the precession angle.
Eigen::Matrix3d rotation_align(double theta_align);

/// Half-cone angle throttling a fixed impulse J down to J_net:
/// phi = arccos(J_net / J). J_net > J means the motor cannot deliver enough
/// impulse (the pit is too deep) and is a domain error.
double precession_angle(double j_net, double j);

/// Thrust-axis direction at ignition: e_d = R1(phi) e_o.
Direction3 desired_impulse_axis(const Direction3& e_o, double phi);

/// No-slip wheel kinematics: w0 = w_s * r_b / r_w.
double wheel_rate_for_spin(double w_s, const BotProperties& bot);

/// Wheel 1 drives the precession along -b_y: w1 = -w_i * r_b / r_w.
double wheel_rate_for_precession(double w_i, const BotProperties& bot);

/// Spin magnitude completing exactly n full rotations over the burn:
/// w_f = 2 pi n / burn_duration.
double full_rotation_spin_rate(double burn_duration, int n);

/// Split the total spin into stabilization and precession components:
/// w_s = w_f cos(phi), w_i = w_f sin(phi).
struct SpinComponents {
  double w_s;  // [rad/s]
  double w_i;  // [rad/s]
};
SpinComponents decompose_spin(double w_f, double phi);

/// Angle between the planned and actual spin vectors; the dot-product
/// argument is clamped to [-1, 1] before arccos.
double pointing_error(const Eigen::Vector3d& w_nominal,
                      const Eigen::Vector3d& w_actual);

/// Touchdown speed when the nominal burn would cancel v_f exactly but the
/// spin axis is off by phi_e: v_i = v_f sqrt(2 - 2 cos(phi_e)).
double impact_speed_with_noise(double v_f, double phi_e);

/// Deterministic unit vector orthogonal to axis: normalize(axis x e_z),
/// falling back to axis x e_x when axis is parallel to e_z.
Direction3 tangent_direction(const Direction3& axis);

/// Assemble the full spin prescription for a burn of the given duration.
SpinPlan make_spin_plan(const Direction3& e_o, double phi, double burn_duration,
                        int n, const BotProperties& bot);

NoiseModel make_noise_model(double sigma_w, const Direction3& e_d);

}  // namespace pitshot::attitude
