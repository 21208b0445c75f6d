#include "pitshot/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "pitshot/errors.hpp"
#include "pitshot/rng.hpp"

namespace pitshot::simulator {

namespace {

using ballistics::kPi;

constexpr int kMinBurnSteps = 50;
constexpr double kGoldenTol = 1e-4;  // [s] ignition-time bracket width

// Integration vector layout: 0-2 position, 3-5 velocity, 6-9 attitude
// quaternion (x, y, z, w), 10-12 accumulated thrust impulse, 13 delivered
// scalar impulse (for variable mass).
using Vec14 = Eigen::Matrix<double, 14, 1>;

struct Dynamics {
  const BodyEnvironment* env = nullptr;
  Eigen::Vector3d w{0.0, 0.0, 0.0};  // constant spin, inertial frame
  const thruster::ThrustProfile* profile = nullptr;  // null while unpowered
  double t_ignition = 0.0;
  double mass = 1.0;  // [kg]
  bool variable_mass = false;
  double propellant_mass = 0.0;
  double total_impulse = 0.0;

  Vec14 operator()(double t, const Vec14& y) const {
    Vec14 dy = Vec14::Zero();
    dy.segment<3>(0) = y.segment<3>(3);
    Eigen::Vector3d acc(0.0, 0.0, -env->g);
    const double thrust = profile ? profile->thrust_at(t - t_ignition) : 0.0;
    if (thrust > 0.0) {
      Eigen::Quaterniond q(y[9], y[6], y[7], y[8]);
      q.normalize();
      const Eigen::Vector3d dir = q * Eigen::Vector3d(0.0, 0.0, -1.0);
      double m = mass;
      if (variable_mass && total_impulse > 0.0) {
        const double spent =
            std::clamp(y[13] / total_impulse, 0.0, 1.0) * propellant_mass;
        m = std::max(mass - spent, 1e-9);
      }
      acc += (thrust / m) * dir;
      dy.segment<3>(10) = thrust * dir;
      dy[13] = thrust;
    }
    dy.segment<3>(3) = acc;
    // q_dot = 0.5 * (0, w) x q with w in the inertial frame
    const Eigen::Quaterniond q(y[9], y[6], y[7], y[8]);
    const Eigen::Quaterniond wq(0.0, w.x(), w.y(), w.z());
    const Eigen::Quaterniond qd = wq * q;
    dy[6] = 0.5 * qd.x();
    dy[7] = 0.5 * qd.y();
    dy[8] = 0.5 * qd.z();
    dy[9] = 0.5 * qd.w();
    return dy;
  }
};

Vec14 pack(const RigidState& s) {
  Vec14 y;
  y.segment<3>(0) = s.r;
  y.segment<3>(3) = s.v;
  y[6] = s.q.x();
  y[7] = s.q.y();
  y[8] = s.q.z();
  y[9] = s.q.w();
  y.segment<3>(10).setZero();
  y[13] = 0.0;
  return y;
}

RigidState unpack(double t, const Vec14& y, const Eigen::Vector3d& w) {
  RigidState s;
  s.t = t;
  s.r = y.segment<3>(0);
  s.v = y.segment<3>(3);
  s.q = Eigen::Quaterniond(y[9], y[6], y[7], y[8]).normalized();
  s.w = w;
  return s;
}

void rk4_step(const Dynamics& dyn, double t, double dt, Vec14& y) {
  const Vec14 k1 = dyn(t, y);
  const Vec14 k2 = dyn(t + 0.5 * dt, y + (0.5 * dt) * k1);
  const Vec14 k3 = dyn(t + 0.5 * dt, y + (0.5 * dt) * k2);
  const Vec14 k4 = dyn(t + dt, y + dt * k3);
  y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  y.segment<4>(6).normalize();
}

using SampleSink = std::function<void(double, const Vec14&)>;

struct PhaseResult {
  bool crossed = false;
  double t = 0.0;
  Vec14 y = Vec14::Zero();
};

// Steps from (t0, y) to t_end with uniform steps no longer than dt_nominal.
// Stops at the first z = floor_z crossing, located by linear interpolation
// between the bracketing steps.
PhaseResult run_phase(const Dynamics& dyn, double t0, Vec14 y, double t_end,
                      double dt_nominal, double floor_z, int min_steps,
                      const SampleSink& sink) {
  if (!(t_end > t0)) return {false, t0, y};
  const double span = t_end - t0;
  auto steps = static_cast<long long>(std::ceil(span / dt_nominal - 1e-9));
  steps = std::max<long long>(steps, min_steps);
  const double dt = span / static_cast<double>(steps);
  for (long long i = 0; i < steps; ++i) {
    const double t_prev = t0 + static_cast<double>(i) * dt;
    const double t_next = (i + 1 == steps) ? t_end : t0 + static_cast<double>(i + 1) * dt;
    const Vec14 y_prev = y;
    rk4_step(dyn, t_prev, t_next - t_prev, y);
    if (y[2] <= floor_z && y_prev[2] > floor_z) {
      const double alpha = (floor_z - y_prev[2]) / (y[2] - y_prev[2]);
      Vec14 yc = y_prev + alpha * (y - y_prev);
      yc.segment<4>(6).normalize();
      return {true, t_prev + alpha * (t_next - t_prev), yc};
    }
    if (sink) sink(t_next, y);
  }
  return {false, t_end, y};
}

void require_valid_step(const SimConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    throw SimulationError("integration step dt must be > 0 and finite");
  }
}

void require_above_floor(const RigidState& s, double floor_depth) {
  if (floor_depth < 0.0) {
    throw SimulationError("floor depth must be >= 0");
  }
  if (s.r.z() <= -floor_depth) {
    throw SimulationError("initial state is not above the floor");
  }
}

// Flight-time budget: a multiple of the closed-form time for the initial
// state to fall to the floor.
double resolve_max_time(const RigidState& s, const BodyEnvironment& env,
                        double floor_depth, const SimConfig& cfg) {
  if (cfg.max_time) return *cfg.max_time;
  const double drop = s.r.z() + floor_depth;  // height above the floor [m]
  const double vz = s.v.z();
  double t_floor = 0.0;
  if (env.g > 0.0) {
    t_floor = (vz + std::sqrt(vz * vz + 2.0 * env.g * drop)) / env.g;
  } else if (vz < 0.0) {
    t_floor = drop / (-vz);
  } else {
    t_floor = 1e4;  // no ballistic crossing exists; let the budget expire
  }
  if (!std::isfinite(t_floor) || t_floor <= 0.0) t_floor = 1e4;
  return cfg.max_time_factor * std::max(t_floor, 10.0 * cfg.dt);
}

void check_full_rotations(const Eigen::Vector3d& w, double burn_duration,
                          const SimConfig& cfg) {
  if (cfg.allow_partial_rotations) return;
  const double rotations = w.norm() * burn_duration / (2.0 * kPi);
  const double nearest = std::round(rotations);
  if (nearest < 1.0 || std::abs(rotations - nearest) > 1e-6 * std::max(1.0, rotations)) {
    throw SimulationError(
        "burn covers " + std::to_string(rotations) +
        " thrust-axis rotations; a whole positive number is required to null "
        "the transverse impulse (set allow_partial_rotations to override)");
  }
}

SampleSink make_sink(std::vector<TrajectorySample>* out) {
  if (!out) return {};
  return [out](double t, const Vec14& y) {
    out->push_back({t, y.segment<3>(0), y.segment<3>(3)});
  };
}

ImpactOutcome finish_outcome(double t, const Vec14& y, const SpinPlan& spin,
                             BurnDisposition disposition) {
  ImpactOutcome out;
  out.t_impact = t;
  out.r_impact = y.segment<3>(0);
  out.v_impact_vec = y.segment<3>(3);
  out.v_impact = out.v_impact_vec.norm();
  out.burn_impulse = y.segment<3>(10);
  const Eigen::Vector3d axis = spin.e_o.vec();
  out.impulse_along_axis = -out.burn_impulse.dot(axis);
  out.residual_transverse_impulse =
      (out.burn_impulse - out.burn_impulse.dot(axis) * axis).norm();
  out.disposition = disposition;
  return out;
}

struct LegResult {
  bool crossed = false;
  double t = 0.0;
  Vec14 y = Vec14::Zero();
};

LegResult run_leg(const RigidState& initial, double t_end,
                  const BodyEnvironment& env, double floor_depth,
                  const SimConfig& cfg, const SampleSink& sink) {
  Dynamics dyn;
  dyn.env = &env;
  dyn.w = initial.w;
  auto r = run_phase(dyn, initial.t, pack(initial), t_end, cfg.dt, -floor_depth,
                     1, sink);
  return {r.crossed, r.t, r.y};
}

}  // namespace

UnpoweredResult integrate_unpowered(const RigidState& initial,
                                    const BodyEnvironment& env,
                                    double floor_depth, const SimConfig& cfg) {
  require_valid_step(cfg);
  require_above_floor(initial, floor_depth);
  const double t_limit = initial.t + resolve_max_time(initial, env, floor_depth, cfg);

  UnpoweredResult result;
  result.trajectory.push_back({initial.t, initial.r, initial.v});
  const auto sink = make_sink(&result.trajectory);

  Dynamics dyn;
  dyn.env = &env;
  dyn.w = initial.w;
  const auto phase = run_phase(dyn, initial.t, pack(initial), t_limit, cfg.dt,
                               -floor_depth, 1, sink);
  if (!phase.crossed) {
    throw SimulationError("no floor crossing within " +
                          std::to_string(t_limit - initial.t) + " s of flight");
  }
  result.crossing = unpack(phase.t, phase.y, initial.w);
  result.trajectory.push_back(
      {result.crossing.t, result.crossing.r, result.crossing.v});
  return result;
}

ImpactOutcome integrate_with_burn(const RigidState& initial, const SpinPlan& spin,
                                  const ThrusterSpec& thruster_spec,
                                  const BodyEnvironment& env, double floor_depth,
                                  const SimConfig& cfg, const BotProperties& bot,
                                  std::vector<TrajectorySample>* trajectory_out) {
  require_valid_step(cfg);
  require_above_floor(initial, floor_depth);
  thruster::validate(thruster_spec);
  if (!cfg.ignition_time) {
    throw SimulationError(
        "ignition_time is unresolved; run auto_ignition_time or set it explicitly");
  }
  const double t_ig = *cfg.ignition_time;
  if (t_ig < initial.t - 1e-12) {
    throw SimulationError("ignition_time precedes the initial state");
  }
  check_full_rotations(initial.w, thruster_spec.burn_duration, cfg);

  const double t_limit = initial.t + resolve_max_time(initial, env, floor_depth, cfg);
  const double floor_z = -floor_depth;
  const auto sink = make_sink(trajectory_out);
  if (trajectory_out && trajectory_out->empty()) {
    trajectory_out->push_back({initial.t, initial.r, initial.v});
  }
  const auto record_impact = [&](const ImpactOutcome& out) {
    if (trajectory_out) {
      trajectory_out->push_back({out.t_impact, out.r_impact, out.v_impact_vec});
    }
    return out;
  };

  Dynamics coast;
  coast.env = &env;
  coast.w = initial.w;

  // Unpowered until ignition.
  auto leg = run_phase(coast, initial.t, pack(initial), std::max(t_ig, initial.t),
                       cfg.dt, floor_z, 1, sink);
  if (leg.crossed) {
    return record_impact(finish_outcome(leg.t, leg.y, spin, BurnDisposition::no_burn));
  }

  // Finite burn; thrust acts along the body -b_z axis through the center of
  // mass, so the spin vector is untouched.
  Dynamics burn = coast;
  burn.profile = &thruster_spec.profile;
  burn.t_ignition = t_ig;
  burn.mass = bot.m;
  burn.variable_mass = cfg.variable_mass;
  burn.propellant_mass = thruster_spec.propellant_mass;
  burn.total_impulse = thruster_spec.total_impulse;
  auto fired = run_phase(burn, leg.t, leg.y, t_ig + thruster_spec.burn_duration,
                         cfg.dt, floor_z, kMinBurnSteps, sink);
  if (fired.crossed) {
    return record_impact(
        finish_outcome(fired.t, fired.y, spin, BurnDisposition::floor_hit_mid_burn));
  }

  // Coast to the floor.
  auto descent = run_phase(coast, fired.t, fired.y, t_limit, cfg.dt, floor_z, 1,
                           sink);
  if (!descent.crossed) {
    throw SimulationError("no floor crossing within " +
                          std::to_string(t_limit - initial.t) + " s of flight");
  }
  return record_impact(
      finish_outcome(descent.t, descent.y, spin, BurnDisposition::burnout_above_floor));
}

Eigen::Quaterniond ignition_attitude(const SpinPlan& spin) {
  return Eigen::Quaterniond::FromTwoVectors(Eigen::Vector3d::UnitZ(),
                                            spin.e_d.vec());
}

RigidState make_launch_state(double v0, double theta, const SpinPlan& spin,
                             const Eigen::Vector3d& spin_vector) {
  RigidState s;
  s.t = 0.0;
  s.r.setZero();
  s.v = {v0 * std::cos(theta), 0.0, v0 * std::sin(theta)};
  s.q = ignition_attitude(spin);
  s.w = spin_vector;
  return s;
}

RigidState make_launch_state(double v0, double theta, const SpinPlan& spin) {
  return make_launch_state(v0, theta, spin, spin.nominal_spin());
}

RigidState propagate_unpowered_to(const RigidState& initial, double t_end,
                                  const BodyEnvironment& env, double floor_depth,
                                  const SimConfig& cfg) {
  require_valid_step(cfg);
  require_above_floor(initial, floor_depth);
  auto leg = run_leg(initial, t_end, env, floor_depth, cfg, {});
  if (leg.crossed) {
    throw SimulationError("floor crossed at t=" + std::to_string(leg.t) +
                          " s, before the requested time");
  }
  return unpack(leg.t, leg.y, initial.w);
}

ImpactOutcome fly_from_ignition(const MissionInput& input, double t_ignition,
                                const Eigen::Vector3d& spin_vector,
                                const SimConfig& cfg,
                                std::vector<TrajectorySample>* trajectory_out) {
  require_valid_step(cfg);
  const RigidState launch = make_launch_state(input.v0, input.theta, input.spin);
  const auto sink = make_sink(trajectory_out);
  if (trajectory_out) trajectory_out->push_back({launch.t, launch.r, launch.v});

  auto leg = run_leg(launch, t_ignition, input.env, input.floor_depth, cfg, sink);
  if (leg.crossed) {
    auto out = finish_outcome(leg.t, leg.y, input.spin, BurnDisposition::no_burn);
    if (trajectory_out) {
      trajectory_out->push_back({out.t_impact, out.r_impact, out.v_impact_vec});
    }
    return out;
  }

  // Re-anchor the attitude on the cone at ignition; the roll phase is a free
  // convention and the launcher noise enters through the spin vector only.
  RigidState at_ignition = unpack(leg.t, leg.y, spin_vector);
  at_ignition.q = ignition_attitude(input.spin);

  SimConfig burn_cfg = cfg;
  burn_cfg.ignition_time = t_ignition;
  return integrate_with_burn(at_ignition, input.spin, input.thruster, input.env,
                             input.floor_depth, burn_cfg, input.bot,
                             trajectory_out);
}

IgnitionSearchResult auto_ignition_time(const MissionInput& input,
                                        const SimConfig& cfg) {
  require_valid_step(cfg);
  const RigidState launch = make_launch_state(input.v0, input.theta, input.spin);
  const auto unpowered =
      integrate_unpowered(launch, input.env, input.floor_depth, cfg);
  const double t_floor = unpowered.crossing.t;
  const double burn = input.thruster.burn_duration;
  if (!(burn < t_floor - launch.t)) {
    throw SimulationError("burn duration " + std::to_string(burn) +
                          " s is not shorter than the flight time " +
                          std::to_string(t_floor - launch.t) + " s");
  }

  const auto touchdown_speed = [&](double t_ig) {
    return fly_from_ignition(input, t_ig, input.spin.nominal_spin(), cfg).v_impact;
  };

  double a = std::max(launch.t, t_floor - 2.0 * burn);
  double b = t_floor;
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = touchdown_speed(c);
  double fd = touchdown_speed(d);
  while (b - a > kGoldenTol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = touchdown_speed(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = touchdown_speed(d);
    }
  }

  IgnitionSearchResult result;
  result.t_ignition = 0.5 * (a + b);
  result.outcome =
      fly_from_ignition(input, result.t_ignition, input.spin.nominal_spin(), cfg);
  if (result.outcome.v_impact > cfg.soft_landing_threshold) {
    throw SimulationError(
        "unreachable soft landing: best touchdown speed " +
        std::to_string(result.outcome.v_impact) + " m/s (at ignition " +
        std::to_string(result.t_ignition) + " s) exceeds the threshold " +
        std::to_string(cfg.soft_landing_threshold) + " m/s");
  }
  return result;
}

namespace {

ColumnStats column_stats(std::vector<double> values) {
  ColumnStats stats;
  const auto n = values.size();
  if (n == 0) return stats;
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(n);
  if (n > 1) {
    double acc = 0.0;
    for (double v : values) acc += (v - stats.mean) * (v - stats.mean);
    stats.stddev = std::sqrt(acc / static_cast<double>(n - 1));
  }
  std::sort(values.begin(), values.end());
  const auto rank = [&](double q) {
    auto idx = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(n))) ;
    idx = std::min(std::max<std::size_t>(idx, 1), n);
    return values[idx - 1];
  };
  stats.p50 = rank(0.50);
  stats.p95 = rank(0.95);
  stats.p99 = rank(0.99);
  return stats;
}

}  // namespace

DispersionReport monte_carlo(const MissionInput& input, double t_ignition,
                             const NoiseModel& noise, int trials,
                             std::uint64_t seed, const SimConfig& cfg) {
  if (trials < 1) throw std::domain_error("Monte Carlo needs trials >= 1");
  require_valid_step(cfg);

  const RigidState launch = make_launch_state(input.v0, input.theta, input.spin);
  const RigidState at_ignition = propagate_unpowered_to(
      launch, t_ignition, input.env, input.floor_depth, cfg);

  const Eigen::Quaterniond q_ig = ignition_attitude(input.spin);
  const Eigen::Vector3d axis = input.spin.e_o.vec();
  const Eigen::Vector3d axis_tangent =
      attitude::tangent_direction(input.spin.e_o).vec();
  const Eigen::Vector3d w_nominal = input.spin.w_f * input.spin.e_d.vec();
  const Eigen::Vector3d e_t = noise.e_t.vec();

  SimConfig trial_cfg = cfg;
  trial_cfg.ignition_time = t_ignition;
  trial_cfg.allow_partial_rotations = true;  // noise breaks exact nulling

  DispersionReport report;
  report.rows.reserve(static_cast<std::size_t>(trials));
  for (int trial = 0; trial < trials; ++trial) {
    rng::SplitMix64 gen(rng::substream_seed(seed, static_cast<std::uint64_t>(trial)));
    const double w_e =
        noise.sigma_w > 0.0 ? noise.sigma_w * rng::standard_normal(gen) : 0.0;
    const double phi_e =
        attitude::pointing_error(w_nominal, w_nominal + w_e * e_t);
    const double v_closed = attitude::impact_speed_with_noise(input.v_f, phi_e);

    RigidState s = at_ignition;
    s.q = q_ig;
    s.w = input.spin.w_f * axis + w_e * axis_tangent;
    const auto outcome = integrate_with_burn(s, input.spin, input.thruster,
                                             input.env, input.floor_depth,
                                             trial_cfg, input.bot);
    report.rows.push_back({trial, w_e, phi_e, v_closed, outcome.v_impact});
  }

  std::vector<double> closed, sim;
  closed.reserve(report.rows.size());
  sim.reserve(report.rows.size());
  for (const auto& row : report.rows) {
    closed.push_back(row.v_i_closed);
    sim.push_back(row.v_i_sim);
  }
  report.closed_form = column_stats(closed);
  report.simulated = column_stats(sim);

  constexpr int kBins = 20;
  const double top = std::max(*std::max_element(sim.begin(), sim.end()), 1e-12);
  report.histogram_edges.resize(kBins + 1);
  report.histogram_counts.assign(kBins, 0);
  for (int i = 0; i <= kBins; ++i) {
    report.histogram_edges[i] = top * static_cast<double>(i) / kBins;
  }
  for (double v : sim) {
    auto bin = static_cast<int>(std::floor(v / top * kBins));
    bin = std::clamp(bin, 0, kBins - 1);
    ++report.histogram_counts[static_cast<std::size_t>(bin)];
  }
  return report;
}

}  // namespace pitshot::simulator
