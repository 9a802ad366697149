#pragma once

#include <string>
#include <vector>

#include "haway/config.hpp"
#include "haway/probes.hpp"

namespace haway {

struct RunResult {
  std::vector<ProbeSeries> probes;
  double dt = 0.0;
  long steps = 0;
};

// Advances config.steps steps with the stepper the configuration selects
// (free space, split-field layers, or the advective layers when the flow is
// nonzero), records every probe every step, and writes pressure snapshots to
// config.out_dir every snapshot_every steps. Identical configurations
// produce bit-identical outputs. Throws std::runtime_error naming the first
// offending step when a field stops being finite.
RunResult run(const SimulationConfig& config);

// Effective absorbing profile for a configuration (resolves the sigma_max
// defaults).
SigmaProfile config_profile(const SimulationConfig& config,
                            const StaggeredGrid& grid, double dt);

}  // namespace haway
