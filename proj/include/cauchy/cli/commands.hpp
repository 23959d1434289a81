#pragma once

#include <iosfwd>
#include <string>

#include "cauchy/cli/run_config.hpp"
#include "cauchy/discrete_ops.hpp"

namespace cauchy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitUsage = 64;

struct GainReport {
    GainMethod method = GainMethod::ackermann;
    GainVector gain;
    double pole_min = 0.0;
    double pole_max = 0.0;
    double spectral_radius = 0.0;
    double obs_matrix_condition = 0.0;
};

/// Builds the observer gain selected by the config for the assembled system.
GainReport design_gain(const RunConfig& cfg, const SystemMatrices& mats);

/// Runs the observer and writes boundary.csv, history.csv, gain.csv and
/// plot.gp into cfg.output_dir.
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Writes spectral.csv and observability.csv into cfg.output_dir.
int cmd_diagnose(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cauchy::cli
