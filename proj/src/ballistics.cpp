#include "pitshot/ballistics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pitshot::ballistics {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw std::domain_error(std::string(name) + " must be finite");
  }
}

void require_launch_angle(double theta) {
  if (!(theta > 0.0 && theta < kPi / 2.0)) {
    throw std::domain_error(
        "launch angle must lie in the open interval (0, pi/2) rad, got " +
        std::to_string(theta));
  }
}

}  // namespace

void validate(const BodyEnvironment& env) {
  require_finite(env.g, "g");
  if (env.g < 0.0) {
    throw std::domain_error("gravitational acceleration must be >= 0");
  }
}

void validate(const PitGeometry& pit) {
  require_finite(pit.d, "d");
  require_finite(pit.h, "h");
  if (pit.d <= 0.0) throw std::domain_error("pit distance d must be > 0");
  if (pit.h < 0.0) throw std::domain_error("pit depth h must be >= 0");
}

void validate(const BotProperties& bot) {
  require_finite(bot.m, "m");
  require_finite(bot.r_b, "r_b");
  require_finite(bot.r_w, "r_w");
  if (bot.m <= 0.0) throw std::domain_error("bot mass must be > 0");
  if (bot.r_b <= 0.0) throw std::domain_error("bot radius must be > 0");
  if (bot.r_w <= 0.0) throw std::domain_error("wheel radius must be > 0");
}

double required_launch_speed(double d, double theta, const BodyEnvironment& env) {
  if (d <= 0.0 || !std::isfinite(d)) {
    throw std::domain_error("range d must be > 0 and finite");
  }
  require_launch_angle(theta);
  if (env.g <= 0.0) {
    throw std::domain_error("required_launch_speed needs g > 0");
  }
  return std::sqrt(d * env.g / (2.0 * std::sin(theta) * std::cos(theta)));
}

double spring_compression(double v0, const BotProperties& bot, double k) {
  if (k <= 0.0 || !std::isfinite(k)) {
    throw std::domain_error("spring stiffness k must be > 0");
  }
  if (v0 < 0.0) throw std::domain_error("launch speed must be >= 0");
  return v0 * std::sqrt(bot.m / k);
}

LaunchParams make_launch_params(double v0, double theta, const BotProperties& bot,
                                double k) {
  require_launch_angle(theta);
  return LaunchParams{v0, theta, k, spring_compression(v0, bot, k)};
}

double time_to_range(double v0, double theta, const BodyEnvironment& env) {
  if (v0 <= 0.0) throw std::domain_error("launch speed must be > 0");
  require_launch_angle(theta);
  if (env.g <= 0.0) throw std::domain_error("time_to_range needs g > 0");
  return 2.0 * v0 * std::sin(theta) / env.g;
}

double flight_time_to_floor(double v0, double theta, double h,
                            const BodyEnvironment& env) {
  if (h < 0.0) throw std::domain_error("pit depth h must be >= 0");
  if (env.g <= 0.0) throw std::domain_error("flight_time_to_floor needs g > 0");
  const double vz0 = v0 * std::sin(theta);
  return (std::sqrt(2.0 * env.g * h + vz0 * vz0) + vz0) / env.g;
}

TrajectorySample state_at(double t, double v0, double theta,
                          const BodyEnvironment& env) {
  if (t < 0.0) throw std::domain_error("time must be >= 0");
  const double vx = v0 * std::cos(theta);
  const double vz0 = v0 * std::sin(theta);
  TrajectorySample s;
  s.t = t;
  s.r = {vx * t, 0.0, vz0 * t - 0.5 * env.g * t * t};
  s.v = {vx, 0.0, vz0 - env.g * t};
  return s;
}

PreimpactVelocity preimpact_velocity(double v0, double theta, double h,
                                     const BodyEnvironment& env) {
  if (h < 0.0) throw std::domain_error("pit depth h must be >= 0");
  const double vz0 = v0 * std::sin(theta);
  PreimpactVelocity out;
  out.v = {v0 * std::cos(theta), 0.0, -std::sqrt(2.0 * env.g * h + vz0 * vz0)};
  out.speed = std::sqrt(v0 * v0 + 2.0 * env.g * h);
  return out;
}

}  // namespace pitshot::ballistics
