#include "pitshot/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "pitshot/errors.hpp"
#include "pitshot/planner.hpp"

namespace pitshot::config {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

struct KeyContext {
  int line = 0;
  std::string key;
  std::string value;

  [[noreturn]] void fail(const std::string& why) const {
    throw ConfigError("config line " + std::to_string(line) + ": " + key + " " +
                      why + ", got \"" + value + "\"");
  }

  double number() const {
    double out = 0.0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto res = std::from_chars(begin, end, out);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(out)) {
      fail("expects a finite number");
    }
    return out;
  }

  double positive() const {
    const double v = number();
    if (!(v > 0.0)) fail("must be > 0");
    return v;
  }

  double nonnegative() const {
    const double v = number();
    if (v < 0.0) fail("must be >= 0");
    return v;
  }

  std::int64_t integer() const {
    std::int64_t out = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto res = std::from_chars(begin, end, out);
    if (res.ec != std::errc{} || res.ptr != end) fail("expects an integer");
    return out;
  }

  std::uint64_t unsigned64() const {
    std::uint64_t out = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto res = std::from_chars(begin, end, out);
    if (res.ec != std::errc{} || res.ptr != end) {
      fail("expects an unsigned 64-bit integer");
    }
    return out;
  }

  bool flag() const {
    if (value == "on" || value == "true" || value == "1") return true;
    if (value == "off" || value == "false" || value == "0") return false;
    fail("expects on/off");
  }
};

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  bool body_given = false;
  bool g_given = false;

  using Handler = std::function<void(const KeyContext&)>;
  const std::map<std::string, Handler> handlers = {
      {"body",
       [&](const KeyContext& c) {
         if (c.value == "moon") {
           cfg.g = ballistics::BodyEnvironment::moon().g;
         } else if (c.value == "mars") {
           cfg.g = ballistics::BodyEnvironment::mars().g;
         } else {
           c.fail("must be moon or mars");
         }
         body_given = true;
       }},
      {"g",
       [&](const KeyContext& c) {
         cfg.g = c.positive();
         g_given = true;
       }},
      {"d", [&](const KeyContext& c) { cfg.d = c.positive(); }},
      {"h", [&](const KeyContext& c) { cfg.h = c.nonnegative(); }},
      {"m", [&](const KeyContext& c) { cfg.m = c.positive(); }},
      {"r_b", [&](const KeyContext& c) { cfg.r_b = c.positive(); }},
      {"r_w", [&](const KeyContext& c) { cfg.r_w = c.positive(); }},
      {"theta_deg",
       [&](const KeyContext& c) {
         const double v = c.number();
         if (!(v > 0.0 && v < 90.0)) {
           c.fail("must lie in the open interval (0, 90)");
         }
         cfg.theta_deg = v;
       }},
      {"k", [&](const KeyContext& c) { cfg.k = c.positive(); }},
      {"n",
       [&](const KeyContext& c) {
         if (c.value == "auto") {
           cfg.rotations.reset();
           return;
         }
         const auto v = c.integer();
         if (v < 1) c.fail("must be a positive integer or auto");
         cfg.rotations = static_cast<int>(v);
       }},
      {"max_wheel_rate",
       [&](const KeyContext& c) { cfg.max_wheel_rate = c.positive(); }},
      {"thruster", [&](const KeyContext& c) { cfg.thruster_name = c.value; }},
      {"thruster_impulse",
       [&](const KeyContext& c) { cfg.thruster_impulse = c.positive(); }},
      {"thruster_burn",
       [&](const KeyContext& c) { cfg.thruster_burn = c.positive(); }},
      {"thruster_propellant",
       [&](const KeyContext& c) { cfg.thruster_propellant = c.nonnegative(); }},
      {"thruster_isp",
       [&](const KeyContext& c) { cfg.thruster_isp = c.positive(); }},
      {"thruster_curve",
       [&](const KeyContext& c) { cfg.thruster_curve = c.value; }},
      {"dt", [&](const KeyContext& c) { cfg.dt = c.positive(); }},
      {"ignition",
       [&](const KeyContext& c) {
         if (c.value == "auto") {
           cfg.ignition.reset();
           return;
         }
         cfg.ignition = c.nonnegative();
       }},
      {"variable_mass",
       [&](const KeyContext& c) { cfg.variable_mass = c.flag(); }},
      {"max_time_factor",
       [&](const KeyContext& c) { cfg.max_time_factor = c.positive(); }},
      {"touchdown_threshold",
       [&](const KeyContext& c) { cfg.touchdown_threshold = c.positive(); }},
      {"sigma_w", [&](const KeyContext& c) { cfg.sigma_w = c.nonnegative(); }},
      {"trials",
       [&](const KeyContext& c) {
         const auto v = c.integer();
         if (v < 1) c.fail("must be >= 1");
         cfg.trials = static_cast<int>(v);
       }},
      {"seed", [&](const KeyContext& c) { cfg.seed = c.unsigned64(); }},
      {"out_dir", [&](const KeyContext& c) { cfg.out_dir = c.value; }},
  };

  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key=value, got \"" + line + "\"");
    }
    KeyContext ctx{lineno, trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
    if (ctx.key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    }
    const auto handler = handlers.find(ctx.key);
    if (handler == handlers.end()) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": unknown key \"" + ctx.key + "\"");
    }
    if (!seen.insert(ctx.key).second) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": duplicate key \"" + ctx.key + "\"");
    }
    if (ctx.value.empty()) ctx.fail("has an empty value");
    handler->second(ctx);
  }

  if (!seen.count("d")) throw ConfigError("config: missing required key \"d\"");
  if (!seen.count("h")) throw ConfigError("config: missing required key \"h\"");
  if (body_given && g_given) {
    throw ConfigError("config: body and g are mutually exclusive; give one");
  }
  const bool inline_thruster =
      cfg.thruster_impulse || cfg.thruster_burn || cfg.thruster_propellant ||
      cfg.thruster_isp || !cfg.thruster_curve.empty();
  if (!cfg.thruster_name.empty() && inline_thruster) {
    throw ConfigError(
        "config: thruster names a catalog entry; thruster_* keys describe an "
        "inline motor; give one or the other");
  }
  if (cfg.thruster_name.empty() && !inline_thruster) {
    cfg.thruster_name = "D12";
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ballistics::BodyEnvironment environment(const RunConfig& cfg) {
  return {cfg.g};
}

ballistics::PitGeometry pit(const RunConfig& cfg) { return {cfg.d, cfg.h}; }

ballistics::BotProperties bot(const RunConfig& cfg) {
  return {cfg.m, cfg.r_b, cfg.r_w};
}

double theta_rad(const RunConfig& cfg) {
  return ballistics::deg2rad(cfg.theta_deg);
}

thruster::ThrusterSpec resolve_thruster(const RunConfig& cfg) {
  if (!cfg.thruster_name.empty()) {
    return planner::ThrusterCatalog::builtin().at(cfg.thruster_name);
  }
  if (!cfg.thruster_curve.empty()) {
    auto curve = thruster::load_thrust_curve(cfg.thruster_curve);
    if (cfg.thruster_impulse) {
      // Keep the rated impulse and let validation hold the curve to it.
      thruster::ThrusterSpec spec;
      spec.total_impulse = *cfg.thruster_impulse;
      spec.burn_duration = curve.duration();
      spec.profile = std::move(curve);
      spec.propellant_mass = cfg.thruster_propellant.value_or(0.0);
      spec.isp = cfg.thruster_isp.value_or(0.0);
      thruster::validate(spec);
      return spec;
    }
    return thruster::make_curve_thruster(std::move(curve),
                                         cfg.thruster_propellant.value_or(0.0),
                                         cfg.thruster_isp.value_or(0.0));
  }
  if (!cfg.thruster_impulse || !cfg.thruster_burn) {
    throw ConfigError(
        "config: an inline thruster needs both thruster_impulse and "
        "thruster_burn");
  }
  return thruster::make_constant_thruster(*cfg.thruster_impulse,
                                          *cfg.thruster_burn,
                                          cfg.thruster_propellant.value_or(0.0),
                                          cfg.thruster_isp.value_or(0.0));
}

}  // namespace pitshot::config
