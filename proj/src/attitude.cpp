#include "pitshot/attitude.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pitshot::attitude {

using ballistics::kPi;

Direction3 Direction3::from(const Eigen::Vector3d& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::domain_error("cannot normalize a zero or non-finite vector");
  }
  return Direction3(v / norm);
}

Direction3 optimal_impulse_axis(const Eigen::Vector3d& v_tf) {
  return Direction3::from(v_tf);
}

Eigen::Matrix3d rotation_align(double theta_align) {
  const double c = std::cos(theta_align);
  const double s = std::sin(theta_align);
  Eigen::Matrix3d r;
  r << c, 0.0, -s,
       0.0, 1.0, 0.0,
       s, 0.0, c;
  return r;
}

double precession_angle(double j_net, double j) {
  if (!(j > 0.0)) throw std::domain_error("thruster impulse J must be > 0");
  if (j_net < 0.0) {
    throw std::domain_error("net impulse must be >= 0; negative thrust cannot be commanded");
  }
  if (j_net > j) {
    throw std::domain_error("required net impulse " + std::to_string(j_net) +
                            " N*s exceeds the motor rating " + std::to_string(j) +
                            " N*s");
  }
  return std::acos(std::clamp(j_net / j, -1.0, 1.0));
}

Direction3 desired_impulse_axis(const Direction3& e_o, double phi) {
  if (!(phi >= 0.0 && phi <= kPi / 2.0)) {
    throw std::domain_error("precession angle must lie in [0, pi/2]");
  }
  return Direction3::from(rotation_align(phi) * e_o.vec());
}

double wheel_rate_for_spin(double w_s, const BotProperties& bot) {
  if (bot.r_w <= 0.0) throw std::domain_error("wheel radius must be > 0");
  return w_s * bot.r_b / bot.r_w;
}

double wheel_rate_for_precession(double w_i, const BotProperties& bot) {
  if (bot.r_w <= 0.0) throw std::domain_error("wheel radius must be > 0");
  return -w_i * bot.r_b / bot.r_w;
}

double full_rotation_spin_rate(double burn_duration, int n) {
  if (!(burn_duration > 0.0)) {
    throw std::domain_error("burn duration must be > 0");
  }
  if (n < 1) throw std::domain_error("rotation count n must be >= 1");
  return 2.0 * kPi * static_cast<double>(n) / burn_duration;
}

SpinComponents decompose_spin(double w_f, double phi) {
  if (w_f < 0.0) throw std::domain_error("spin magnitude must be >= 0");
  if (!(phi >= 0.0 && phi <= kPi / 2.0)) {
    throw std::domain_error("precession angle must lie in [0, pi/2]");
  }
  return {w_f * std::cos(phi), w_f * std::sin(phi)};
}

double pointing_error(const Eigen::Vector3d& w_nominal,
                      const Eigen::Vector3d& w_actual) {
  const double n0 = w_nominal.norm();
  const double n1 = w_actual.norm();
  if (!(n0 > 0.0) || !(n1 > 0.0)) {
    throw std::domain_error("pointing error is undefined for a zero spin vector");
  }
  const double c = std::clamp(w_nominal.dot(w_actual) / (n0 * n1), -1.0, 1.0);
  return std::acos(c);
}

double impact_speed_with_noise(double v_f, double phi_e) {
  if (v_f < 0.0) throw std::domain_error("pre-impact speed must be >= 0");
  if (!(phi_e >= 0.0 && phi_e <= kPi)) {
    throw std::domain_error("pointing error must lie in [0, pi]");
  }
  return v_f * std::sqrt(std::max(0.0, 2.0 - 2.0 * std::cos(phi_e)));
}

Direction3 tangent_direction(const Direction3& axis) {
  Eigen::Vector3d t = axis.vec().cross(Eigen::Vector3d::UnitZ());
  if (t.norm() < 1e-9) {
    t = axis.vec().cross(Eigen::Vector3d::UnitX());
  }
  return Direction3::from(t);
}

SpinPlan make_spin_plan(const Direction3& e_o, double phi, double burn_duration,
                        int n, const BotProperties& bot) {
  const double w_f = full_rotation_spin_rate(burn_duration, n);
  const auto [w_s, w_i] = decompose_spin(w_f, phi);
  return SpinPlan{e_o,
                  desired_impulse_axis(e_o, phi),
                  phi,
                  w_f,
                  w_s,
                  w_i,
                  n,
                  wheel_rate_for_spin(w_s, bot),
                  wheel_rate_for_precession(w_i, bot)};
}

NoiseModel make_noise_model(double sigma_w, const Direction3& e_d) {
  if (sigma_w < 0.0) throw std::domain_error("sigma_w must be >= 0");
  return NoiseModel{sigma_w, tangent_direction(e_d)};
}

}  // namespace pitshot::attitude
