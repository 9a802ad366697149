#include "haway/harness.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "haway/solver.hpp"

namespace haway {

ExperimentSpec pbm1_spec() { return ExperimentSpec{}; }

ExperimentSpec pbm2_spec() {
  ExperimentSpec s;
  s.steps = 3000;
  return s;
}

namespace {

SimulationConfig math_experiment_config(const ExperimentSpec& spec) {
  const double offset = spec.x_max + spec.L_pml;
  const double L = 2.0 * offset;
  const int J = static_cast<int>(L);
  if (static_cast<double>(J) != L)
    throw std::invalid_argument("experiment: x_max + L_pml must be integral");
  SimulationConfig cfg;
  cfg.J = J;
  cfg.L = L;
  cfg.pml_cells = static_cast<int>(spec.L_pml);
  cfg.pml_profile = "constant";
  cfg.cfl_fraction = spec.cfl_fraction;
  cfg.steps = spec.steps;
  const StaggeredGrid grid = new_grid(J, L, cfg.pml_cells, cfg.pml_cells);
  const double dt = spec.cfl_fraction * cfl_limit(grid, 1.0);
  cfg.sigma_max = spec.sigma_dt / dt;
  cfg.has_source = true;
  cfg.source.x = spec.source_x + offset;
  cfg.source.y = spec.source_y + offset;
  cfg.source.width = 9.0;
  cfg.source.amplitude = spec.amplitude;
  cfg.source.time_profile = spec.psi;
  for (const ProbePoint& p : spec.probes)
    cfg.probes.push_back({p.x + offset, p.y + offset});
  return cfg;
}

void recentre(RunResult& result, double offset) {
  for (ProbeSeries& s : result.probes) {
    s.x -= offset;
    s.y -= offset;
    s.xi_x -= offset;
    s.xi_y -= offset;
    s.zeta_x -= offset;
    s.zeta_y -= offset;
  }
}

}  // namespace

RunResult run_pbm1(const ExperimentSpec& spec) {
  SimulationConfig cfg = math_experiment_config(spec);
  cfg.source.kind = SourceKind::time_forcing;
  cfg.source.target = SourceTarget::vm2;
  RunResult result = run(cfg);
  recentre(result, spec.x_max + spec.L_pml);
  return result;
}

RunResult run_pbm2(const ExperimentSpec& spec) {
  SimulationConfig cfg = math_experiment_config(spec);
  cfg.source.kind = SourceKind::initial_condition;
  cfg.source.target = SourceTarget::xi_zeta;
  RunResult result = run(cfg);
  recentre(result, spec.x_max + spec.L_pml);
  return result;
}

ErrorSeries l2_error(const ProbeSeries& a, const ProbeSeries& b) {
  if (a.times.size() != b.times.size())
    throw std::invalid_argument("l2_error: series lengths differ");
  if (a.times.size() < 2)
    throw std::invalid_argument("l2_error: series too short");
  const double scale = std::max(std::fabs(a.times.back()), 1.0);
  for (std::size_t k = 0; k < a.times.size(); ++k)
    if (std::fabs(a.times[k] - b.times[k]) > 1e-9 * scale)
      throw std::invalid_argument("l2_error: time axes differ");
  const double dt = a.times[1] - a.times[0];
  ErrorSeries e;
  e.abs_diff.resize(a.times.size());
  e.running_l2.resize(a.times.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < a.times.size(); ++k) {
    const double d = std::fabs(a.p[k] - b.p[k]);
    e.abs_diff[k] = d;
    acc += d * d * dt;
    e.running_l2[k] = std::sqrt(acc);
  }
  e.total_l2 = e.running_l2.back();
  return e;
}

namespace {

SimulationConfig physical_config(const PhysicalSpec& spec,
                                 const FlowState& flow, double x_max,
                                 int pml_cells) {
  const double offset = x_max + pml_cells;
  SimulationConfig cfg;
  cfg.L = 2.0 * offset;
  cfg.J = static_cast<int>(cfg.L);
  cfg.pml_cells = pml_cells;
  cfg.pml_profile = spec.profile;
  cfg.sigma_max = spec.sigma_max;
  cfg.ramp_exponent = spec.ramp_exponent;
  cfg.flow = flow;
  cfg.cfl_fraction = spec.cfl_fraction;
  cfg.steps = spec.steps;
  cfg.has_source = true;
  cfg.source.kind = SourceKind::time_forcing;
  cfg.source.target = SourceTarget::pressure;
  cfg.source.time_profile = TimeProfile::sin_pi_t;
  cfg.source.x = offset;
  cfg.source.y = offset;
  cfg.probes.push_back({spec.probe_x + offset, spec.probe_y + offset});
  return cfg;
}

}  // namespace

ProbeSeries run_physical_reference(const PhysicalSpec& spec,
                                   const FlowState& flow) {
  RunResult result = run(physical_config(spec, flow, spec.ref_x_max, 0));
  ProbeSeries series = std::move(result.probes.front());
  series.x -= spec.ref_x_max;
  series.y -= spec.ref_x_max;
  return series;
}

PhysicalResult run_physical(const PhysicalSpec& spec, int layers,
                            const FlowState& flow,
                            const ProbeSeries& reference) {
  if (layers < 1) throw std::invalid_argument("physical: need layers >= 1");
  RunResult small_result =
      run(physical_config(spec, flow, spec.x_max, layers));
  PhysicalResult out;
  out.dt = small_result.dt;
  out.probe = std::move(small_result.probes.front());
  out.probe.x -= spec.x_max + layers;
  out.probe.y -= spec.x_max + layers;
  out.reference = reference;
  out.error = l2_error(out.probe, out.reference);
  return out;
}

PhysicalResult run_physical(const PhysicalSpec& spec, int layers,
                            const FlowState& flow) {
  return run_physical(spec, layers, flow,
                      run_physical_reference(spec, flow));
}

namespace {

// Bilinear sample of a staggered field whose station (i, j) sits at
// ((i + ox) dx, (j + oy) dy).
double bilinear(const Field2D& f, double ox, double oy, double dx, double dy,
                double x, double y) {
  double fx = x / dx - ox;
  double fy = y / dy - oy;
  fx = std::min(std::max(fx, 0.0), static_cast<double>(f.nx() - 1));
  fy = std::min(std::max(fy, 0.0), static_cast<double>(f.ny() - 1));
  int i0 = std::min(static_cast<int>(fx), f.nx() - 2);
  int j0 = std::min(static_cast<int>(fy), f.ny() - 2);
  const double wx = fx - i0;
  const double wy = fy - j0;
  return (1.0 - wx) * (1.0 - wy) * f(i0, j0) + wx * (1.0 - wy) * f(i0 + 1, j0) +
         (1.0 - wx) * wy * f(i0, j0 + 1) + wx * wy * f(i0 + 1, j0 + 1);
}

}  // namespace

ReductionResult run_reduction(const ReductionSpec& spec) {
  const double m = spec.mach;
  FlowState flow;
  flow.u0 = m;
  flow.v0 = 0.0;
  flow.c0 = 1.0;

  const auto direct_run = [&](int J) {
    SimulationConfig cfg;
    cfg.J = J;
    cfg.L = spec.domain;
    cfg.pml_cells = 0;
    cfg.flow = flow;
    cfg.cfl_fraction = spec.cfl_fraction;
    cfg.has_source = true;
    cfg.source.kind = SourceKind::time_forcing;
    cfg.source.target = SourceTarget::pressure;
    cfg.source.time_profile = TimeProfile::sin_pi_t;
    cfg.source.x = spec.source_x;
    cfg.source.y = spec.source_y;
    cfg.probes.push_back({spec.probe_x, spec.probe_y});
    const StaggeredGrid grid = new_grid(cfg.J, cfg.L, 0, 0);
    const double dt =
        spec.cfl_fraction * cfl_limit(grid, 1.0 + flow.mach());
    cfg.steps = static_cast<long>(std::ceil(spec.t_end / dt));
    return run(cfg);
  };

  RunResult fine = direct_run(spec.J);
  RunResult coarse = direct_run(spec.J / 2);

  ReductionResult out;
  out.times = fine.probes[0].times;
  out.p_direct = fine.probes[0].p;
  out.dt = fine.dt;

  // Coarse direct solve resampled on the fine axis (linear in time).
  out.p_coarse.resize(out.times.size());
  {
    const ProbeSeries& c = coarse.probes[0];
    TwoLevelInterpolator interp;
    std::size_t next = 0;
    for (std::size_t k = 0; k < out.times.size(); ++k) {
      const double t = out.times[k];
      while (next < c.times.size() && (!interp.ready() || interp.newest_time() < t))
        interp.push(c.times[next], c.p[next]), ++next;
      out.p_coarse[k] = interp.at(t);
    }
  }

  // Transformed-space reference: the non-advective system with impulse
  // gradient coefficient q = 1 - M0^2 (celerity sqrt(q)), forced by the
  // pushed-forward source, then mapped back to the probe point.
  const LorentzMap map = make_map(flow);
  const double q = 1.0 - m * m;
  const double g = std::sqrt(q);

  // The original domain [0, L]^2 dilates to [0, ax L] x [0, L]; embed it in
  // a square padded so boundary reflections stay causally silent at the
  // probe for the whole transformed run.
  const double tp_max = spec.t_end + map.tx * spec.probe_x + 1.0;
  const double Lp = std::ceil(map.ax * spec.domain) + 10.0;
  const double dxp = spec.domain / spec.J;
  const int Jp = static_cast<int>(std::lround(Lp / dxp));
  const StaggeredGrid tgrid = new_grid(Jp, Lp, 0, 0);
  const SchemeParams tparams = make_params(tgrid, g, spec.cfl_fraction);
  const long tsteps =
      static_cast<long>(std::ceil(tp_max / tparams.dt)) + 2;

  FieldSet fields = zero_fields(tgrid);

  const double xs = spec.source_x, ys = spec.source_y;
  const auto spatial = [&](double xp, double yp) {
    const double x = xp / map.ax;
    const double y = yp / map.ay;
    const double r2 = (x - xs) * (x - xs) + (y - ys) * (y - ys);
    return std::exp(-std::numbers::ln2 * r2 / 9.0);
  };
  const auto phase = [&](double xp, double yp, double tp) {
    // original time at this transformed event
    return tp - map.tx * xp / map.ax - map.ty * yp / map.ay;
  };

  const double xp_probe = map.ax * spec.probe_x;
  const double yp_probe = map.ay * spec.probe_y;

  TwoLevelInterpolator ip, ixi, ize;
  std::vector<double> p_mapped(out.times.size());
  std::size_t next_target = 0;
  const auto emit_until = [&](double newest) {
    while (next_target < out.times.size()) {
      const double tp_target =
          out.times[next_target] + map.tx * xp_probe / map.ax;
      if (!(ip.ready() && newest >= tp_target)) break;
      const Acoustic2 prim = from_tilde(map, flow, ip.at(tp_target),
                                        ixi.at(tp_target), ize.at(tp_target));
      p_mapped[next_target] = prim.p;
      ++next_target;
    }
  };

  // Record level 0.
  ip.push(0.0, 0.0);
  ixi.push(0.5 * tparams.dt, 0.0);
  ize.push(0.5 * tparams.dt, 0.0);

  for (long n = 0; n < tsteps; ++n) {
    step_transformed(tgrid, fields, tparams, q);
    // Pushed-forward forcing: S_p composed with the inverse map on the
    // pressure equation, -m times it on the xi equation.
    const double tp_p = (n + 0.5) * tparams.dt;
    const double tp_i = (n + 1.0) * tparams.dt;
    for (int j = 0; j < Jp; ++j)
      for (int i = 0; i < Jp; ++i) {
        const double xp = tgrid.center(i), yp = tgrid.center(j);
        const double G = spatial(xp, yp);
        if (G > 1e-14)
          fields.p_x(i, j) += tparams.dt * G *
                              std::sin(std::numbers::pi * phase(xp, yp, tp_p));
      }
    for (int j = 0; j < Jp; ++j)
      for (int i = 1; i < Jp; ++i) {
        const double xp = tgrid.edge(i), yp = tgrid.center(j);
        const double G = spatial(xp, yp);
        if (G > 1e-14)
          fields.xi(i, j) -= tparams.dt * m * G *
                             std::sin(std::numbers::pi * phase(xp, yp, tp_i));
      }

    const double tp = (n + 1) * tparams.dt;
    ip.push(tp, bilinear(fields.p_x, 0.5, 0.5, tgrid.dx, tgrid.dy, xp_probe,
                         yp_probe) +
                    bilinear(fields.p_y, 0.5, 0.5, tgrid.dx, tgrid.dy,
                             xp_probe, yp_probe));
    ixi.push(tp + 0.5 * tparams.dt,
             bilinear(fields.xi, 0.0, 0.5, tgrid.dx, tgrid.dy, xp_probe,
                      yp_probe));
    ize.push(tp + 0.5 * tparams.dt,
             bilinear(fields.zeta, 0.5, 0.0, tgrid.dx, tgrid.dy, xp_probe,
                      yp_probe));
    emit_until(tp);
  }
  if (next_target < out.times.size())
    throw std::runtime_error("reduction: transformed run too short");
  out.p_mapped = std::move(p_mapped);
  return out;
}

}  // namespace haway
