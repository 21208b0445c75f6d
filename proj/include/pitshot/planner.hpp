#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pitshot/attitude.hpp"
#include "pitshot/ballistics.hpp"
#include "pitshot/thruster.hpp"

namespace pitshot::planner {

using attitude::Direction3;
using attitude::SpinPlan;
using ballistics::BodyEnvironment;
using ballistics::BotProperties;
using ballistics::PitGeometry;
using thruster::ThrusterSpec;

/// Fully resolved mission: every field is re-derivable from the inputs, so
/// planning twice from the recorded inputs reproduces the plan bit for bit.
struct MissionPlan {
  PitGeometry pit;
  BodyEnvironment env;
  BotProperties bot;
  ThrusterSpec thruster;
  double theta = 0.0;     // launch elevation [rad]
  double spring_k = 0.0;  // [N/m]

  double v0 = 0.0;                  // launch speed [m/s]
  double spring_compression = 0.0;  // [m]
  double t_d = 0.0;                 // time back to the launch plane [s]
  double t_f = 0.0;                 // time to the pit floor [s]
  double v_f = 0.0;                 // pre-impact speed [m/s]
  Eigen::Vector3d v_preimpact{0.0, 0.0, 0.0};

  Direction3 e_o;   // optimal impulse axis
  double phi = 0.0; // precession half-cone angle [rad]
  SpinPlan spin;

  double ignition_time = 0.0;        // burn ends at the floor [s]
  double predicted_v_impact = 0.0;   // 0 for the ideal plan
  double fuel_equivalent_mass = 0.0; // propellant matching J_net [kg]
};

struct PlanOptions {
  std::optional<int> rotations;  // nullopt = pick the largest feasible n
  double spring_k = 4012.0;      // [N/m]
  double max_wheel_rate = 300.0; // [rad/s] cap for both launcher wheels
};

MissionPlan plan_mission(const PitGeometry& pit, double theta,
                         const BodyEnvironment& env, const BotProperties& bot,
                         const ThrusterSpec& thruster,
                         const PlanOptions& options = {});

/// Deepest pit the motor can soft-land in at the given standoff and angle:
/// h_max = ((J/m)^2 - v0^2) / (2 g), the depth at which phi reaches 0.
double max_depth(double total_impulse, double d, double theta,
                 const BodyEnvironment& env, const BotProperties& bot);

struct DepthRow {
  double impulse = 0.0;  // [N*s]
  double h_max = 0.0;    // [m]
};
std::vector<DepthRow> sweep_depth_vs_impulse(double d, double theta,
                                             const BodyEnvironment& env,
                                             const BotProperties& bot,
                                             const std::vector<double>& impulses);

struct ThetaRow {
  double theta = 0.0;      // [rad]
  double v0 = 0.0;         // [m/s]
  double delta_v = 0.0;    // pre-impact speed to cancel [m/s]
  double fuel_mass = 0.0;  // [kg]
};
/// One row per grid angle; values at exactly 0 or pi/2 are excluded rather
/// than producing infinities.
std::vector<ThetaRow> sweep_theta(double d, double h, const BodyEnvironment& env,
                                  const BotProperties& bot, double isp,
                                  const std::vector<double>& thetas);

/// Impulse-equivalent propellant at constant mass:
/// fuel = m * delta_v / (isp * g0).
double fuel_mass(double delta_v, const BotProperties& bot, double isp);

/// Battery budget of one bot. The component figures are sustained draws in
/// mW against a battery capacity in mWh.
struct PowerBudget {
  double battery_energy = 9000.0;  // [mWh]
  double computer = 120.0;         // [mW]
  double cameras = 200.0;          // [mW]
  double radio = 1100.0;           // [mW]
  double payload = 0.0;            // [mW]
};

/// battery / total draw [h]; zero total draw is a domain error ("infinite
/// duration").
double mission_duration_hours(const PowerBudget& budget);

/// Built-in motors. "D12" is the 20 N*s baseline; "D-30" is the 30 N*s
/// variant costing 14 g of payload mass.
class ThrusterCatalog {
 public:
  static const ThrusterCatalog& builtin();

  bool contains(const std::string& name) const;
  const ThrusterSpec& at(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, ThrusterSpec> entries_;
};

/// Default sweep grids covering the trade studies.
std::vector<double> default_theta_grid();    // 5..85 deg, 1 deg steps [rad]
std::vector<double> default_impulse_grid();  // 5..40 N*s, 0.5 N*s steps

}  // namespace pitshot::planner
