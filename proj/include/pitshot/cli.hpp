#pragma once

#include <filesystem>
#include <iosfwd>

#include "pitshot/config.hpp"

namespace pitshot::cli {

/// Subcommand bodies. Each writes its CSV products into out_dir and a
/// human-readable report to log, returning the process exit code.
int cmd_plan(const config::RunConfig& cfg, const std::filesystem::path& out_dir,
             std::ostream& log);
int cmd_simulate(const config::RunConfig& cfg,
                 const std::filesystem::path& out_dir, std::ostream& log);
int cmd_sweep(const config::RunConfig& cfg, const std::filesystem::path& out_dir,
              std::ostream& log);
int cmd_montecarlo(const config::RunConfig& cfg,
                   const std::filesystem::path& out_dir, std::ostream& log);
int cmd_figures(const config::RunConfig& cfg,
                const std::filesystem::path& out_dir, std::ostream& log);

/// Full argv dispatch: `pitshot plan|simulate|sweep|montecarlo|figures
/// --config <path> [--out <dir>] [--seed <u64>]`. The PITSHOT_OUT environment
/// variable overrides --out. Exit codes: 0 success, 2 config error,
/// 3 planning infeasibility, 4 simulation failure.
int run(int argc, const char* const* argv, std::ostream& log, std::ostream& err);

}  // namespace pitshot::cli
