#include "pitshot/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pitshot/errors.hpp"

namespace pitshot::planner {

namespace ball = pitshot::ballistics;
using ball::kPi;

namespace {

/// Largest rotation count keeping both launcher wheels under the rate cap.
int auto_rotation_count(double phi, double burn_duration,
                        const BotProperties& bot, double max_wheel_rate) {
  const double per_rotation = 2.0 * kPi / burn_duration;  // w_f per unit n
  const double ratio = bot.r_b / bot.r_w;
  const double worst = per_rotation * ratio * std::max(std::cos(phi), std::sin(phi));
  const int n = static_cast<int>(std::floor(max_wheel_rate / worst));
  if (n < 1) {
    throw PlanningError("wheel rate cap " + std::to_string(max_wheel_rate) +
                        " rad/s cannot sustain even one thrust-axis rotation "
                        "over the burn");
  }
  return n;
}

}  // namespace

MissionPlan plan_mission(const PitGeometry& pit, double theta,
                         const BodyEnvironment& env, const BotProperties& bot,
                         const ThrusterSpec& thruster_spec,
                         const PlanOptions& options) {
  ball::validate(pit);
  ball::validate(env);
  ball::validate(bot);
  thruster::validate(thruster_spec);
  if (!(theta > 0.0 && theta < kPi / 2.0)) {
    throw PlanningError("invalid angle: launch elevation must lie in the open "
                        "interval (0, pi/2) rad, got " + std::to_string(theta));
  }

  const double v0 = ball::required_launch_speed(pit.d, theta, env);
  const double x = ball::spring_compression(v0, bot, options.spring_k);
  const double t_d = ball::time_to_range(v0, theta, env);
  const double t_f = ball::flight_time_to_floor(v0, theta, pit.h, env);
  const auto pre = ball::preimpact_velocity(v0, theta, pit.h, env);

  const double required = bot.m * pre.speed;  // J_net to cancel v_f [N*s]
  if (required > thruster_spec.total_impulse) {
    throw PlanningError(
        "insufficient impulse: cancelling " + std::to_string(pre.speed) +
            " m/s on " + std::to_string(bot.m) + " kg needs " +
            std::to_string(required) + " N*s but the motor delivers " +
            std::to_string(thruster_spec.total_impulse) + " N*s",
        required, thruster_spec.total_impulse);
  }

  const auto e_o = attitude::optimal_impulse_axis(pre.v);
  const double phi = attitude::precession_angle(required, thruster_spec.total_impulse);
  const int n = options.rotations
                    ? *options.rotations
                    : auto_rotation_count(phi, thruster_spec.burn_duration, bot,
                                          options.max_wheel_rate);
  const auto spin =
      attitude::make_spin_plan(e_o, phi, thruster_spec.burn_duration, n, bot);

  return MissionPlan{
      .pit = pit,
      .env = env,
      .bot = bot,
      .thruster = thruster_spec,
      .theta = theta,
      .spring_k = options.spring_k,
      .v0 = v0,
      .spring_compression = x,
      .t_d = t_d,
      .t_f = t_f,
      .v_f = pre.speed,
      .v_preimpact = pre.v,
      .e_o = e_o,
      .phi = phi,
      .spin = spin,
      .ignition_time = std::max(0.0, t_f - thruster_spec.burn_duration),
      .predicted_v_impact = 0.0,
      .fuel_equivalent_mass = thruster_spec.isp > 0.0
                                  ? fuel_mass(pre.speed, bot, thruster_spec.isp)
                                  : 0.0,
  };
}

double max_depth(double total_impulse, double d, double theta,
                 const BodyEnvironment& env, const BotProperties& bot) {
  if (!(total_impulse > 0.0)) {
    throw PlanningError("total impulse must be > 0");
  }
  const double v0 = ball::required_launch_speed(d, theta, env);
  const double v_cap = total_impulse / bot.m;  // top speed the motor can cancel
  const double h = (v_cap * v_cap - v0 * v0) / (2.0 * env.g);
  if (h < 0.0) {
    throw PlanningError(
        "unreachable even at zero depth: the launch alone needs " +
            std::to_string(bot.m * v0) + " N*s but the motor delivers " +
            std::to_string(total_impulse) + " N*s",
        bot.m * v0, total_impulse);
  }
  return h;
}

std::vector<DepthRow> sweep_depth_vs_impulse(double d, double theta,
                                             const BodyEnvironment& env,
                                             const BotProperties& bot,
                                             const std::vector<double>& impulses) {
  if (!std::is_sorted(impulses.begin(), impulses.end())) {
    throw PlanningError("impulse grid must be ascending");
  }
  std::vector<DepthRow> rows;
  rows.reserve(impulses.size());
  for (double j : impulses) {
    rows.push_back({j, max_depth(j, d, theta, env, bot)});
  }
  return rows;
}

std::vector<ThetaRow> sweep_theta(double d, double h, const BodyEnvironment& env,
                                  const BotProperties& bot, double isp,
                                  const std::vector<double>& thetas) {
  std::vector<ThetaRow> rows;
  rows.reserve(thetas.size());
  for (double theta : thetas) {
    if (!(theta > 0.0 && theta < kPi / 2.0)) continue;  // exclude the poles
    const double v0 = ball::required_launch_speed(d, theta, env);
    const double v_f = ball::preimpact_velocity(v0, theta, h, env).speed;
    rows.push_back({theta, v0, v_f, fuel_mass(v_f, bot, isp)});
  }
  return rows;
}

double fuel_mass(double delta_v, const BotProperties& bot, double isp) {
  if (!(isp > 0.0)) throw std::domain_error("Isp must be > 0");
  if (delta_v < 0.0) throw std::domain_error("delta_v must be >= 0");
  return bot.m * delta_v / (isp * thruster::kStandardGravity);
}

double mission_duration_hours(const PowerBudget& budget) {
  if (budget.battery_energy < 0.0 || budget.computer < 0.0 ||
      budget.cameras < 0.0 || budget.radio < 0.0 || budget.payload < 0.0) {
    throw std::domain_error("power budget entries must be >= 0");
  }
  const double draw = budget.computer + budget.cameras + budget.radio + budget.payload;
  if (draw <= 0.0) {
    throw std::domain_error("infinite duration: total power draw is zero");
  }
  return budget.battery_energy / draw;
}

const ThrusterCatalog& ThrusterCatalog::builtin() {
  static const ThrusterCatalog catalog = [] {
    ThrusterCatalog c;
    c.entries_.emplace(
        "D12", thruster::make_constant_thruster(20.0, 1.65, 0.02493, 81.7784,
                                                0.042, "D12"));
    // Same Isp as the D12; burn duration scaled by the impulse ratio, and the
    // extra 14 g comes out of the payload budget.
    c.entries_.emplace(
        "D-30", thruster::make_constant_thruster(
                    30.0, 1.65 * 30.0 / 20.0,
                    30.0 / (81.7784 * thruster::kStandardGravity), 81.7784,
                    0.056, "D-30"));
    return c;
  }();
  return catalog;
}

bool ThrusterCatalog::contains(const std::string& name) const {
  return entries_.count(name) != 0;
}

const ThrusterSpec& ThrusterCatalog::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) {
    throw ConfigError("unknown thruster \"" + name + "\"");
  }
  return it->second;
}

std::vector<std::string> ThrusterCatalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [name, spec] : entries_) out.push_back(name);
  return out;
}

std::vector<double> default_theta_grid() {
  std::vector<double> grid;
  for (int deg = 5; deg <= 85; ++deg) {
    grid.push_back(ball::deg2rad(static_cast<double>(deg)));
  }
  return grid;
}

std::vector<double> default_impulse_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 70; ++i) {
    grid.push_back(5.0 + 0.5 * static_cast<double>(i));
  }
  return grid;
}

}  // namespace pitshot::planner
