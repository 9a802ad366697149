#include "haway/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "haway/solver.hpp"

namespace haway {

SigmaProfile config_profile(const SimulationConfig& cfg,
                            const StaggeredGrid& grid, double dt) {
  if (cfg.pml_cells <= 0) return zero_profile(grid);
  if (cfg.pml_profile == "constant") {
    const double sigma = cfg.sigma_max >= 0.0 ? cfg.sigma_max : 0.1 / dt;
    return constant_profile(grid, sigma);
  }
  if (cfg.pml_profile == "quadratic") {
    const double delta = cfg.pml_cells * grid.dx;
    const double sigma_max =
        cfg.sigma_max >= 0.0 ? cfg.sigma_max : 8.0 / delta;
    return polynomial_profile(grid, sigma_max, cfg.ramp_exponent);
  }
  throw std::invalid_argument("config: unknown pml.profile " +
                              cfg.pml_profile);
}

RunResult run(const SimulationConfig& cfg) {
  const StaggeredGrid grid = new_grid(cfg.J, cfg.L, cfg.pml_cells,
                                      cfg.pml_cells);
  const double mach = cfg.flow.mach();
  const bool advective = cfg.flow.u0 != 0.0 || cfg.flow.v0 != 0.0;
  // Code units: celerity 1; the advective stepper is bounded by the fastest
  // characteristic 1 + M0.
  const double celerity = advective ? 1.0 + mach : 1.0;
  const SchemeParams params = make_params(grid, celerity, cfg.cfl_fraction);
  const SigmaProfile profile = config_profile(cfg, grid, params.dt);

  FieldSet fields = zero_fields(grid);
  AdvectiveScratch scratch;

  if (cfg.has_source && cfg.source.kind == SourceKind::initial_condition)
    apply_source(grid, fields, cfg.source, 0.0, params.dt);

  std::vector<Probe> probes;
  probes.reserve(cfg.probes.size());
  for (const ProbePoint& pt : cfg.probes) probes.emplace_back(grid, pt.x, pt.y);
  for (Probe& p : probes) {
    p.series().dt = params.dt;
    p.record(grid, fields, 0.0);
  }

  const bool snapshots = cfg.snapshot_every > 0;
  if (snapshots && cfg.out_dir.empty())
    throw std::invalid_argument("run: snapshots need an output directory");
  if (snapshots) std::filesystem::create_directories(cfg.out_dir);

  for (long n = 0; n < cfg.steps; ++n) {
    if (advective)
      step_advective_pml(grid, fields, params, profile, cfg.flow, scratch);
    else if (cfg.pml_cells > 0)
      step_pml(grid, fields, params, profile);
    else
      step_free(grid, fields, params);

    if (cfg.has_source && cfg.source.kind == SourceKind::time_forcing)
      apply_source(grid, fields, cfg.source, n * params.dt, params.dt,
                   cfg.hard_set_forcing);

    if (!fields.all_finite())
      throw std::runtime_error("run: field stopped being finite at step " +
                               std::to_string(n + 1));

    const double t = (n + 1) * params.dt;
    for (Probe& p : probes) p.record(grid, fields, t);

    if (snapshots && (n + 1) % cfg.snapshot_every == 0) {
      char name[48];
      std::snprintf(name, sizeof(name), "snapshot_%06ld.txt", n + 1);
      std::ofstream os(std::filesystem::path(cfg.out_dir) / name);
      write_snapshot(os, grid, fields, t);
    }
  }

  RunResult result;
  result.dt = params.dt;
  result.steps = cfg.steps;
  for (Probe& p : probes) result.probes.push_back(std::move(p.series()));
  return result;
}

}  // namespace haway
