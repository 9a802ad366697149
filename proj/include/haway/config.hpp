#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "haway/flow.hpp"
#include "haway/probes.hpp"
#include "haway/solver.hpp"

namespace haway {

struct ProbePoint {
  double x = 0.0, y = 0.0;
};

// One simulation: grid, layers, flow, scheme, source, observation points.
// Grid coordinates throughout ([0,L]^2); the experiment harness translates
// centered coordinates before building one of these.
struct SimulationConfig {
  int J = 100;
  double L = 100.0;
  int pml_cells = 0;
  std::string pml_profile = "quadratic";  // quadratic | constant
  double sigma_max = -1.0;  // < 0: 8*c_ref/delta (quadratic) or 0.1/dt (constant)
  int ramp_exponent = 2;
  FlowState flow;
  double cfl_fraction = 0.95;
  long steps = 100;
  bool has_source = false;
  Source source;
  bool hard_set_forcing = false;
  std::vector<ProbePoint> probes;
  long snapshot_every = 0;
  std::string out_dir;
};

// Flat key-value text: one `key = value` per line, `#` starts a comment.
// Keys: grid.J, grid.L, pml.cells, pml.profile, pml.sigma_max, pml.exponent,
// flow.u0, flow.v0, flow.c0, scheme.cfl_fraction, scheme.steps,
// source.kind, source.target, source.time_profile, source.center,
// source.width, source.amplitude, source.decay_rate, source.hard_set,
// probes (semicolon-separated x,y pairs), snapshot.every.
SimulationConfig parse_config(std::istream& is);
SimulationConfig load_config(const std::string& path);

}  // namespace haway
