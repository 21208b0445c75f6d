#include "pitshot/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pitshot/attitude.hpp"
#include "pitshot/ballistics.hpp"
#include "pitshot/csv.hpp"
#include "pitshot/errors.hpp"
#include "pitshot/planner.hpp"
#include "pitshot/simulator.hpp"

namespace pitshot::cli {

namespace {

namespace ball = pitshot::ballistics;
namespace fs = std::filesystem;
using csv::format_number;

planner::MissionPlan make_plan(const config::RunConfig& cfg) {
  return planner::plan_mission(
      config::pit(cfg), config::theta_rad(cfg), config::environment(cfg),
      config::bot(cfg), config::resolve_thruster(cfg),
      planner::PlanOptions{cfg.rotations, cfg.k, cfg.max_wheel_rate});
}

simulator::MissionInput mission_input(const planner::MissionPlan& plan) {
  return simulator::MissionInput{plan.v0,  plan.theta, plan.spin,
                                 plan.thruster, plan.env,   plan.bot,
                                 plan.pit.h,    plan.v_f};
}

simulator::SimConfig sim_config(const config::RunConfig& cfg) {
  simulator::SimConfig sim;
  sim.dt = cfg.dt;
  sim.ignition_time = cfg.ignition;
  sim.variable_mass = cfg.variable_mass;
  sim.seed = cfg.seed;
  sim.max_time_factor = cfg.max_time_factor;
  sim.soft_landing_threshold = cfg.touchdown_threshold;
  return sim;
}

double resolve_ignition(const simulator::MissionInput& input,
                        const simulator::SimConfig& sim,
                        const config::RunConfig& cfg, std::ostream& log) {
  if (cfg.ignition) return *cfg.ignition;
  const auto search = simulator::auto_ignition_time(input, sim);
  log << "auto ignition: t_ig = " << format_number(search.t_ignition)
      << " s (touchdown " << format_number(search.outcome.v_impact)
      << " m/s)\n";
  return search.t_ignition;
}

}  // namespace

int cmd_plan(const config::RunConfig& cfg, const fs::path& out_dir,
             std::ostream& log) {
  const auto plan = make_plan(cfg);

  const std::vector<std::pair<std::string, std::string>> fields = {
      {"d_m", format_number(plan.pit.d)},
      {"h_m", format_number(plan.pit.h)},
      {"g_mps2", format_number(plan.env.g)},
      {"m_kg", format_number(plan.bot.m)},
      {"r_b_m", format_number(plan.bot.r_b)},
      {"r_w_m", format_number(plan.bot.r_w)},
      {"theta_deg", format_number(ball::rad2deg(plan.theta))},
      {"spring_k_npm", format_number(plan.spring_k)},
      {"thruster", plan.thruster.name.empty() ? "custom" : plan.thruster.name},
      {"impulse_ns", format_number(plan.thruster.total_impulse)},
      {"burn_s", format_number(plan.thruster.burn_duration)},
      {"v0_mps", format_number(plan.v0)},
      {"spring_compression_m", format_number(plan.spring_compression)},
      {"t_d_s", format_number(plan.t_d)},
      {"t_f_s", format_number(plan.t_f)},
      {"v_f_mps", format_number(plan.v_f)},
      {"v_preimpact_x_mps", format_number(plan.v_preimpact.x())},
      {"v_preimpact_y_mps", format_number(plan.v_preimpact.y())},
      {"v_preimpact_z_mps", format_number(plan.v_preimpact.z())},
      {"e_o_x", format_number(plan.e_o.x())},
      {"e_o_y", format_number(plan.e_o.y())},
      {"e_o_z", format_number(plan.e_o.z())},
      {"e_d_x", format_number(plan.spin.e_d.x())},
      {"e_d_y", format_number(plan.spin.e_d.y())},
      {"e_d_z", format_number(plan.spin.e_d.z())},
      {"phi_deg", format_number(ball::rad2deg(plan.phi))},
      {"n_rotations", format_number(static_cast<std::int64_t>(plan.spin.n))},
      {"w_f_radps", format_number(plan.spin.w_f)},
      {"w_s_radps", format_number(plan.spin.w_s)},
      {"w_i_radps", format_number(plan.spin.w_i)},
      {"wheel0_radps", format_number(plan.spin.w0)},
      {"wheel1_radps", format_number(plan.spin.w1)},
      {"ignition_time_s", format_number(plan.ignition_time)},
      {"predicted_v_impact_mps", format_number(plan.predicted_v_impact)},
      {"fuel_equivalent_kg", format_number(plan.fuel_equivalent_mass)},
  };

  csv::CsvFile out(out_dir / "plan.csv");
  out.header({"field", "value"});
  for (const auto& [name, value] : fields) out.row({name, value});
  out.close();

  log << "mission plan\n";
  for (const auto& [name, value] : fields) {
    log << "  " << name << " = " << value << "\n";
  }
  log << "wrote " << (out_dir / "plan.csv").string() << "\n";
  return 0;
}

int cmd_simulate(const config::RunConfig& cfg, const fs::path& out_dir,
                 std::ostream& log) {
  const auto plan = make_plan(cfg);
  const auto input = mission_input(plan);
  const auto sim = sim_config(cfg);
  const double t_ig = resolve_ignition(input, sim, cfg, log);

  std::vector<ball::TrajectorySample> trajectory;
  const auto outcome = simulator::fly_from_ignition(
      input, t_ig, plan.spin.nominal_spin(), sim, &trajectory);

  // Unpowered reference run for the closed-form cross-check.
  const auto launch =
      simulator::make_launch_state(plan.v0, plan.theta, plan.spin);
  const auto unpowered =
      simulator::integrate_unpowered(launch, plan.env, plan.pit.h, sim);

  csv::CsvFile out(out_dir / "sim_traj.csv");
  out.header({"t_s", "x_m", "y_m", "z_m", "vx_mps", "vy_mps", "vz_mps",
              "speed_mps"});
  for (const auto& s : trajectory) {
    out.row({format_number(s.t), format_number(s.r.x()), format_number(s.r.y()),
             format_number(s.r.z()), format_number(s.v.x()),
             format_number(s.v.y()), format_number(s.v.z()),
             format_number(s.v.norm())});
  }
  out.close();

  const double j_net = plan.thruster.total_impulse * std::cos(plan.phi);
  log << "touchdown report\n";
  log << "  ignition_time_s = " << format_number(t_ig) << "\n";
  log << "  t_impact_s = " << format_number(outcome.t_impact) << "\n";
  log << "  touchdown_speed_mps = " << format_number(outcome.v_impact) << "\n";
  log << "  residual_transverse_impulse_ns = "
      << format_number(outcome.residual_transverse_impulse) << "\n";
  log << "  impulse_along_axis_ns = "
      << format_number(outcome.impulse_along_axis) << " (plan "
      << format_number(j_net) << ", delta "
      << format_number(outcome.impulse_along_axis - j_net) << ")\n";
  log << "  preimpact_speed_mps = "
      << format_number(unpowered.crossing.v.norm()) << " (plan "
      << format_number(plan.v_f) << ", delta "
      << format_number(unpowered.crossing.v.norm() - plan.v_f) << ")\n";
  log << "  touchdown_vs_plan_mps = "
      << format_number(outcome.v_impact - plan.predicted_v_impact) << "\n";
  log << "  disposition = "
      << (outcome.disposition == simulator::BurnDisposition::burnout_above_floor
              ? "burnout above floor"
              : outcome.disposition == simulator::BurnDisposition::floor_hit_mid_burn
                    ? "floor hit mid-burn"
                    : "no burn")
      << "\n";
  log << "wrote " << (out_dir / "sim_traj.csv").string() << "\n";
  return 0;
}

int cmd_sweep(const config::RunConfig& cfg, const fs::path& out_dir,
              std::ostream& log) {
  const auto env = config::environment(cfg);
  const auto bot = config::bot(cfg);
  const auto thr = config::resolve_thruster(cfg);
  const double theta = config::theta_rad(cfg);

  csv::CsvFile angles(out_dir / "sweep_theta.csv");
  angles.header({"theta_deg", "v0_mps", "delta_v_mps", "fuel_g"});
  for (const auto& row : planner::sweep_theta(cfg.d, cfg.h, env, bot, thr.isp,
                                              planner::default_theta_grid())) {
    angles.row({format_number(ball::rad2deg(row.theta)), format_number(row.v0),
                format_number(row.delta_v),
                format_number(row.fuel_mass * 1e3)});
  }
  angles.close();

  csv::CsvFile depths(out_dir / "sweep_impulse.csv");
  depths.header({"impulse_ns", "max_depth_m"});
  for (const auto& row : planner::sweep_depth_vs_impulse(
           cfg.d, theta, env, bot, planner::default_impulse_grid())) {
    depths.row({format_number(row.impulse), format_number(row.h_max)});
  }
  depths.close();

  log << "wrote " << (out_dir / "sweep_theta.csv").string() << " and "
      << (out_dir / "sweep_impulse.csv").string() << "\n";
  return 0;
}

int cmd_montecarlo(const config::RunConfig& cfg, const fs::path& out_dir,
                   std::ostream& log) {
  const auto plan = make_plan(cfg);
  const auto input = mission_input(plan);
  const auto sim = sim_config(cfg);
  const double t_ig = resolve_ignition(input, sim, cfg, log);

  const auto noise = attitude::make_noise_model(cfg.sigma_w, plan.spin.e_d);
  const auto report = simulator::monte_carlo(input, t_ig, noise, cfg.trials,
                                             cfg.seed, sim);

  csv::CsvFile out(out_dir / "montecarlo.csv");
  out.comment("pitshot Monte Carlo dispersion");
  out.comment("trials=" + format_number(static_cast<std::int64_t>(cfg.trials)) +
              " sigma_w_radps=" + format_number(cfg.sigma_w) +
              " seed=" + std::to_string(cfg.seed) +
              " ignition_time_s=" + format_number(t_ig));
  const auto stats_line = [](const simulator::ColumnStats& s) {
    return "mean=" + format_number(s.mean) + " std=" + format_number(s.stddev) +
           " p50=" + format_number(s.p50) + " p95=" + format_number(s.p95) +
           " p99=" + format_number(s.p99);
  };
  out.comment("v_i_closed_mps " + stats_line(report.closed_form));
  out.comment("v_i_sim_mps " + stats_line(report.simulated));
  for (std::size_t i = 0; i < report.histogram_counts.size(); ++i) {
    out.comment("hist v_i_sim [" + format_number(report.histogram_edges[i]) +
                ", " + format_number(report.histogram_edges[i + 1]) +
                ") count=" +
                format_number(static_cast<std::int64_t>(report.histogram_counts[i])));
  }
  out.header({"trial", "w_e_radps", "phi_e_rad", "v_i_closed_mps",
              "v_i_sim_mps"});
  for (const auto& row : report.rows) {
    out.row({format_number(static_cast<std::int64_t>(row.trial)),
             format_number(row.w_e), format_number(row.phi_e),
             format_number(row.v_i_closed), format_number(row.v_i_sim)});
  }
  out.close();

  log << "monte carlo (" << cfg.trials << " trials)\n";
  log << "  v_i_closed_mps " << stats_line(report.closed_form) << "\n";
  log << "  v_i_sim_mps " << stats_line(report.simulated) << "\n";
  log << "wrote " << (out_dir / "montecarlo.csv").string() << "\n";
  return 0;
}

int cmd_figures(const config::RunConfig& cfg, const fs::path& out_dir,
                std::ostream& log) {
  const auto env = config::environment(cfg);
  const auto bot = config::bot(cfg);
  const auto thr = config::resolve_thruster(cfg);
  const double theta = config::theta_rad(cfg);
  const auto plan = make_plan(cfg);

  csv::CsvFile fig8a(out_dir / "fig8a.csv");
  fig8a.header({"impulse_ns", "max_depth_m"});
  for (const auto& row : planner::sweep_depth_vs_impulse(
           cfg.d, theta, env, bot, planner::default_impulse_grid())) {
    fig8a.row({format_number(row.impulse), format_number(row.h_max)});
  }
  fig8a.close();

  csv::CsvFile fig8b(out_dir / "fig8b.csv");
  fig8b.header({"depth_m", "precession_deg"});
  {
    const double v0 = ball::required_launch_speed(cfg.d, theta, env);
    const double h_max =
        planner::max_depth(thr.total_impulse, cfg.d, theta, env, bot);
    for (int h = 0; h <= static_cast<int>(std::floor(h_max)); ++h) {
      const double v_f =
          ball::preimpact_velocity(v0, theta, static_cast<double>(h), env).speed;
      const double phi =
          attitude::precession_angle(bot.m * v_f, thr.total_impulse);
      fig8b.row({format_number(static_cast<std::int64_t>(h)),
                 format_number(ball::rad2deg(phi))});
    }
  }
  fig8b.close();

  const auto theta_rows = planner::sweep_theta(cfg.d, cfg.h, env, bot, thr.isp,
                                               planner::default_theta_grid());
  csv::CsvFile fig9a(out_dir / "fig9a.csv");
  fig9a.header({"theta_deg", "v0_mps", "delta_v_mps"});
  for (const auto& row : theta_rows) {
    fig9a.row({format_number(ball::rad2deg(row.theta)), format_number(row.v0),
               format_number(row.delta_v)});
  }
  fig9a.close();

  csv::CsvFile fig9b(out_dir / "fig9b.csv");
  fig9b.header({"theta_deg", "fuel_g"});
  for (const auto& row : theta_rows) {
    fig9b.row({format_number(ball::rad2deg(row.theta)),
               format_number(row.fuel_mass * 1e3)});
  }
  fig9b.close();

  csv::CsvFile fig4(out_dir / "fig4.csv");
  fig4.header({"payload_mw", "duration_h"});
  for (int payload = 0; payload <= 3000; payload += 50) {
    planner::PowerBudget budget;
    budget.payload = static_cast<double>(payload);
    fig4.row({format_number(static_cast<std::int64_t>(payload)),
              format_number(planner::mission_duration_hours(budget))});
  }
  fig4.close();

  // Planned trajectory at 10 ms intervals, with the impact-speed-vs-noise law
  // spread over the same rows.
  csv::CsvFile traj(out_dir / "traj.csv");
  traj.header({"t_s", "x_m", "z_m", "vx_mps", "vz_mps", "phi_e_rad",
               "v_i_mps"});
  {
    const auto rows = static_cast<int>(std::floor(plan.t_f / 0.01)) + 1;
    constexpr double kPhiSpan = 0.2;  // [rad]
    for (int i = 0; i < rows; ++i) {
      const double t = 0.01 * static_cast<double>(i);
      const auto s = ball::state_at(t, plan.v0, plan.theta, env);
      const double phi_e =
          kPhiSpan * static_cast<double>(i) / static_cast<double>(rows - 1);
      traj.row({format_number(t), format_number(s.r.x()),
                format_number(s.r.z()), format_number(s.v.x()),
                format_number(s.v.z()), format_number(phi_e),
                format_number(attitude::impact_speed_with_noise(plan.v_f, phi_e))});
    }
  }
  traj.close();

  log << "wrote fig8a.csv fig8b.csv fig9a.csv fig9b.csv fig4.csv traj.csv in "
      << out_dir.string() << "\n";
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& log, std::ostream& err) {
  CLI::App app{"pitshot: plan, spin, and soft-land a spring-launched microbot"};
  app.require_subcommand(1);

  struct SubArgs {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
  };
  std::map<std::string, SubArgs> args;
  std::map<std::string, int (*)(const config::RunConfig&, const fs::path&,
                                std::ostream&)>
      bodies = {{"plan", cmd_plan},
                {"simulate", cmd_simulate},
                {"sweep", cmd_sweep},
                {"montecarlo", cmd_montecarlo},
                {"figures", cmd_figures}};

  for (auto& [name, body] : bodies) {
    auto* sub = app.add_subcommand(name);
    auto& a = args[name];
    sub->add_option("--config", a.config_path, "run configuration file")
        ->required();
    sub->add_option("--out", a.out_dir, "output directory");
    sub->add_option("--seed", a.seed, "override the config seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      log << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const auto& a = args[name];
  try {
    auto cfg = config::load_config(a.config_path);
    if (a.seed) cfg.seed = *a.seed;
    fs::path out_dir = cfg.out_dir;
    if (!a.out_dir.empty()) out_dir = a.out_dir;
    if (const char* env_out = std::getenv("PITSHOT_OUT")) {
      if (*env_out) out_dir = env_out;
    }
    fs::create_directories(out_dir);
    return bodies.at(name)(cfg, out_dir, log);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const PlanningError& e) {
    err << "planning error: " << e.what() << "\n";
    return 3;
  } catch (const SimulationError& e) {
    err << "simulation error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pitshot::cli
