#include "pitshot/thruster.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "pitshot/errors.hpp"

namespace pitshot::thruster {

ThrustProfile ThrustProfile::constant(double total_impulse, double burn_duration) {
  if (!(total_impulse > 0.0) || !(burn_duration > 0.0)) {
    throw std::domain_error("constant thrust profile needs impulse > 0 and duration > 0");
  }
  ThrustProfile p;
  p.constant_level_ = total_impulse / burn_duration;
  p.duration_ = burn_duration;
  return p;
}

ThrustProfile ThrustProfile::tabulated(std::vector<double> times_s,
                                       std::vector<double> thrusts_n) {
  if (times_s.size() != thrusts_n.size() || times_s.size() < 2) {
    throw std::domain_error("tabulated thrust curve needs at least two (t, F) points");
  }
  for (std::size_t i = 0; i < times_s.size(); ++i) {
    if (!std::isfinite(times_s[i]) || !std::isfinite(thrusts_n[i]) ||
        thrusts_n[i] < 0.0) {
      throw std::domain_error("thrust curve entries must be finite with F >= 0");
    }
    if (i > 0 && times_s[i] <= times_s[i - 1]) {
      throw std::domain_error("thrust curve times must be strictly increasing");
    }
  }
  if (times_s.front() < 0.0) {
    throw std::domain_error("thrust curve times must be >= 0");
  }
  if (times_s.front() > 0.0) {
    times_s.insert(times_s.begin(), 0.0);
    thrusts_n.insert(thrusts_n.begin(), 0.0);
  }
  ThrustProfile p;
  p.duration_ = times_s.back();
  p.times_ = std::move(times_s);
  p.thrusts_ = std::move(thrusts_n);
  return p;
}

double ThrustProfile::thrust_at(double t_rel) const {
  if (t_rel < 0.0 || t_rel > duration_) return 0.0;
  if (is_constant()) return constant_level_;
  auto hi = std::upper_bound(times_.begin(), times_.end(), t_rel);
  if (hi == times_.begin()) return thrusts_.front();
  if (hi == times_.end()) return thrusts_.back();
  const auto i = static_cast<std::size_t>(hi - times_.begin());
  const double t0 = times_[i - 1], t1 = times_[i];
  const double f0 = thrusts_[i - 1], f1 = thrusts_[i];
  return f0 + (f1 - f0) * (t_rel - t0) / (t1 - t0);
}

double ThrustProfile::impulse() const {
  if (is_constant()) return constant_level_ * duration_;
  double total = 0.0;
  for (std::size_t i = 1; i < times_.size(); ++i) {
    total += 0.5 * (thrusts_[i] + thrusts_[i - 1]) * (times_[i] - times_[i - 1]);
  }
  return total;
}

ThrusterSpec make_constant_thruster(double total_impulse, double burn_duration,
                                    double propellant_mass, double isp,
                                    double motor_mass, std::string name) {
  ThrusterSpec spec;
  spec.name = std::move(name);
  spec.total_impulse = total_impulse;
  spec.burn_duration = burn_duration;
  spec.profile = ThrustProfile::constant(total_impulse, burn_duration);
  spec.propellant_mass = propellant_mass;
  spec.isp = isp;
  spec.motor_mass = motor_mass;
  validate(spec);
  return spec;
}

ThrusterSpec make_curve_thruster(ThrustProfile curve, double propellant_mass,
                                 double isp, double motor_mass, std::string name) {
  ThrusterSpec spec;
  spec.name = std::move(name);
  spec.total_impulse = curve.impulse();
  spec.burn_duration = curve.duration();
  spec.profile = std::move(curve);
  spec.propellant_mass = propellant_mass;
  spec.isp = isp;
  spec.motor_mass = motor_mass;
  validate(spec);
  return spec;
}

void validate(const ThrusterSpec& spec) {
  if (!(spec.total_impulse > 0.0)) {
    throw std::domain_error("thruster total impulse must be > 0");
  }
  if (!(spec.burn_duration > 0.0)) {
    throw std::domain_error("thruster burn duration must be > 0");
  }
  if (spec.propellant_mass < 0.0) {
    throw std::domain_error("propellant mass must be >= 0");
  }
  const double integral = spec.profile.impulse();
  if (std::abs(integral - spec.total_impulse) > 1e-3 * spec.total_impulse) {
    throw std::domain_error("thrust profile integral " + std::to_string(integral) +
                            " N*s deviates from the rated impulse " +
                            std::to_string(spec.total_impulse) +
                            " N*s by more than 0.1%");
  }
  if (spec.propellant_mass > 0.0 && spec.isp > 0.0) {
    const double closed = spec.isp * kStandardGravity * spec.propellant_mass;
    if (std::abs(closed - spec.total_impulse) > 5e-3 * spec.total_impulse) {
      throw std::domain_error(
          "Isp * g0 * propellant = " + std::to_string(closed) +
          " N*s deviates from the rated impulse by more than 0.5%");
    }
  }
}

ThrustProfile parse_thrust_curve(std::istream& in) {
  std::vector<double> ts, fs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    double t, f;
    if (!(fields >> t)) continue;  // blank or comment-only line
    if (!(fields >> f)) {
      throw ConfigError("thrust curve line " + std::to_string(lineno) +
                        ": expected two columns (time_s thrust_n)");
    }
    std::string extra;
    if (fields >> extra) {
      throw ConfigError("thrust curve line " + std::to_string(lineno) +
                        ": unexpected trailing field \"" + extra + "\"");
    }
    ts.push_back(t);
    fs.push_back(f);
  }
  try {
    return ThrustProfile::tabulated(std::move(ts), std::move(fs));
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("invalid thrust curve: ") + e.what());
  }
}

ThrustProfile load_thrust_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open thrust curve file \"" + path + "\"");
  return parse_thrust_curve(in);
}

}  // namespace pitshot::thruster
