#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <optional>
#include <vector>

#include "pitshot/attitude.hpp"
#include "pitshot/ballistics.hpp"
#include "pitshot/thruster.hpp"

namespace pitshot::simulator {

using attitude::NoiseModel;
using attitude::SpinPlan;
using ballistics::BodyEnvironment;
using ballistics::BotProperties;
using ballistics::TrajectorySample;
using thruster::ThrusterSpec;

/// Full rigid-body state. The attitude quaternion maps the body frame B to
/// the inertial frame E; the angular velocity is expressed in E and, for the
/// torque-free uniform sphere, never changes during flight.
struct RigidState {
  double t = 0.0;                                        // [s]
  Eigen::Vector3d r{0.0, 0.0, 0.0};                      // [m]
  Eigen::Vector3d v{0.0, 0.0, 0.0};                      // [m/s]
  Eigen::Quaterniond q = Eigen::Quaterniond::Identity();
  Eigen::Vector3d w{0.0, 0.0, 0.0};                      // [rad/s]
};

struct SimConfig {
  double dt = 1e-3;  // RK4 step [s]; burns are stepped at most burn/50
  /// Absolute ignition time [s]. Unset means the caller resolves it first
  /// (see auto_ignition_time).
  std::optional<double> ignition_time;
  bool variable_mass = false;  // deplete propellant linearly with delivered impulse
  std::uint64_t seed = 0;
  /// Flight time budget before "no crossing" is raised, as a multiple of the
  /// closed-form time to the floor (or an explicit override).
  double max_time_factor = 10.0;
  std::optional<double> max_time;  // [s]
  /// Permit burns that do not cover a whole number of thrust-axis rotations
  /// (noise studies and the quarter-rotation experiment need this).
  bool allow_partial_rotations = false;
  double soft_landing_threshold = 2.0;  // [m/s] auto-ignition failure bound
};

enum class BurnDisposition {
  no_burn,              // floor reached before ignition
  floor_hit_mid_burn,   // crossing happened while the motor was firing
  burnout_above_floor,  // motor spent, bot coasted to the floor
};

struct ImpactOutcome {
  double t_impact = 0.0;                     // [s]
  Eigen::Vector3d r_impact{0.0, 0.0, 0.0};   // [m]
  Eigen::Vector3d v_impact_vec{0.0, 0.0, 0.0};
  double v_impact = 0.0;                     // touchdown speed [m/s]
  Eigen::Vector3d burn_impulse{0.0, 0.0, 0.0};  // delivered thrust impulse [N*s]
  double impulse_along_axis = 0.0;           // component opposing e_o [N*s]
  double residual_transverse_impulse = 0.0;  // component orthogonal to e_o [N*s]
  BurnDisposition disposition = BurnDisposition::no_burn;
};

struct UnpoweredResult {
  std::vector<TrajectorySample> trajectory;  // every step plus the crossing
  RigidState crossing;                       // state at z = -floor_depth
};

/// Ballistic flight (gravity only) down to the first crossing of
/// z = -floor_depth, located by linear interpolation between the bracketing
/// steps. Raises SimulationError if the floor is never reached in time.
UnpoweredResult integrate_unpowered(const RigidState& initial,
                                    const BodyEnvironment& env,
                                    double floor_depth, const SimConfig& cfg);

/// Unpowered flight until cfg.ignition_time, a finite burn with thrust of
/// instantaneous magnitude F(t) along the body -b_z axis (through the center
/// of mass, so the spin never changes), then coast to the floor crossing.
/// The caller must have initialized the attitude per the spin plan (thrust
/// axis on the cone; see make_launch_state / ignition_attitude).
ImpactOutcome integrate_with_burn(const RigidState& initial, const SpinPlan& spin,
                                  const ThrusterSpec& thruster,
                                  const BodyEnvironment& env, double floor_depth,
                                  const SimConfig& cfg, const BotProperties& bot,
                                  std::vector<TrajectorySample>* trajectory_out = nullptr);

/// State the launcher releases: planar velocity from (v0, theta), body +b_z
/// aligned with the thrust-cone generator e_d, spinning at the given vector
/// (nominally spin.nominal_spin()).
RigidState make_launch_state(double v0, double theta, const SpinPlan& spin,
                             const Eigen::Vector3d& spin_vector);
RigidState make_launch_state(double v0, double theta, const SpinPlan& spin);

/// Attitude with the body +b_z axis on the thrust cone generator e_d. The
/// roll phase about e_d is a free convention (whole rotations null it out).
Eigen::Quaterniond ignition_attitude(const SpinPlan& spin);

/// Propagates gravity-only flight to exactly t_end (never past the floor;
/// crossing first is a SimulationError).
RigidState propagate_unpowered_to(const RigidState& initial, double t_end,
                                  const BodyEnvironment& env, double floor_depth,
                                  const SimConfig& cfg);

/// Everything needed to fly one planned mission through the simulator.
struct MissionInput {
  double v0 = 0.0;     // [m/s]
  double theta = 0.0;  // [rad]
  SpinPlan spin;
  ThrusterSpec thruster;
  BodyEnvironment env;
  BotProperties bot;
  double floor_depth = 0.0;  // [m]
  double v_f = 0.0;          // closed-form pre-impact speed [m/s]
};

/// Unpowered leg from launch to t_ignition, attitude re-anchored on the cone
/// at ignition, then the burn. Monte Carlo trials and the simulate command
/// share this exact path.
ImpactOutcome fly_from_ignition(const MissionInput& input, double t_ignition,
                                const Eigen::Vector3d& spin_vector,
                                const SimConfig& cfg,
                                std::vector<TrajectorySample>* trajectory_out = nullptr);

struct IgnitionSearchResult {
  double t_ignition = 0.0;  // [s]
  ImpactOutcome outcome;    // flight at the optimum
};

/// Golden-section search for the ignition time minimizing touchdown speed
/// over [t_floor - 2*burn_duration, t_floor]; the bracket is shrunk below
/// 1e-4 s. Raises SimulationError when even the optimum exceeds
/// cfg.soft_landing_threshold.
IgnitionSearchResult auto_ignition_time(const MissionInput& input,
                                        const SimConfig& cfg);

struct TrialRow {
  int trial = 0;
  double w_e = 0.0;         // sampled transverse spin error [rad/s]
  double phi_e = 0.0;       // pointing error [rad]
  double v_i_closed = 0.0;  // closed-form impact speed [m/s]
  double v_i_sim = 0.0;     // simulator impact speed [m/s]
};

struct ColumnStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double p50 = 0.0;
  double p95 = 0.0;
  double p99 = 0.0;
};

struct DispersionReport {
  std::vector<TrialRow> rows;
  ColumnStats closed_form;
  ColumnStats simulated;
  std::vector<double> histogram_edges;  // over v_i_sim, size counts+1
  std::vector<int> histogram_counts;
};

/// Per trial: w_e ~ Normal(0, sigma_w) via Box-Muller on a SplitMix64
/// substream keyed by (seed, trial); phi_e and the closed-form impact speed
/// from the attitude module; the simulated impact speed from
/// integrate_with_burn with the perturbed spin vector. Identical seeds give
/// identical reports.
DispersionReport monte_carlo(const MissionInput& input, double t_ignition,
                             const NoiseModel& noise, int trials,
                             std::uint64_t seed, const SimConfig& cfg);

}  // namespace pitshot::simulator
