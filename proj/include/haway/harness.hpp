#pragma once

#include <string>
#include <vector>

#include "haway/config.hpp"
#include "haway/probes.hpp"
#include "haway/runner.hpp"

namespace haway {

// Geometry and knobs of the Section-7-style experiments. Coordinates are
// centered: the studying medium is [-x_max, x_max]^2 with layers of width
// L_pml outside; lengths are in cells (dx = 1).
struct ExperimentSpec {
  double x_max = 5.0;
  double L_pml = 45.0;
  long steps = 10000;
  double sigma_dt = 0.1;  // constant-profile absorbing coefficient, as sigma* dt
  double cfl_fraction = 0.95;
  double source_x = 25.0, source_y = 0.0;
  TimeProfile psi = TimeProfile::constant;
  double amplitude = 1.0;
  std::vector<ProbePoint> probes = {{45.0, 0.0}, {25.0, 0.0}, {0.0, 0.0},
                                    {-45.0, 0.0}, {0.0, 25.0}, {0.0, -25.0}};
};

ExperimentSpec pbm1_spec();
ExperimentSpec pbm2_spec();

// Forced problem: psi(t) delta V_{M^2} realized as the Gaussian curl data
// (xi <- d psi_xy/dy, zeta <- -d psi_xy/dx) injected inside the layers.
// Probe locations in the result are reported in centered coordinates.
RunResult run_pbm1(const ExperimentSpec& spec);

// Unforced evolution from W(0) = (0, 0, G, G) with the same geometry.
RunResult run_pbm2(const ExperimentSpec& spec);

// Pointwise |a - b| on the pressure series plus the running cumulative
// L2 = sqrt(sum (a_k - b_k)^2 dt). Throws std::invalid_argument when the
// series lengths or time axes disagree.
struct ErrorSeries {
  std::vector<double> abs_diff;
  std::vector<double> running_l2;
  double total_l2 = 0.0;
};

ErrorSeries l2_error(const ProbeSeries& a, const ProbeSeries& b);

// Efficiency study: small domain (x_max, `layers` absorbing cells) against
// the enlarged reference domain whose boundaries stay causally silent at the
// probe for the whole run.
struct PhysicalSpec {
  double x_max = 25.0;
  double ref_x_max = 150.0;
  long steps = 300;
  double cfl_fraction = 0.95;
  std::string profile = "quadratic";  // quadratic | constant
  double sigma_max = 1.5;
  int ramp_exponent = 2;
  double probe_x = 25.0, probe_y = 0.0;
};

struct PhysicalResult {
  ProbeSeries probe;      // small domain
  ProbeSeries reference;  // enlarged domain
  ErrorSeries error;
  double dt = 0.0;
};

PhysicalResult run_physical(const PhysicalSpec& spec, int layers,
                            const FlowState& flow);

// Reference solve alone (for sweeping layer counts against one reference)
// and the comparison entry point that reuses it.
ProbeSeries run_physical_reference(const PhysicalSpec& spec,
                                   const FlowState& flow);
PhysicalResult run_physical(const PhysicalSpec& spec, int layers,
                            const FlowState& flow,
                            const ProbeSeries& reference);

// Direct advective stepping against the transformed-space non-advective
// solve (celerity c0 sqrt(1-M0^2)) mapped back through the change of
// unknowns and linear time interpolation. p_coarse holds the direct solve at
// half resolution resampled on the same axis, which estimates the
// single-scheme truncation level.
struct ReductionResult {
  std::vector<double> times;
  std::vector<double> p_direct;
  std::vector<double> p_mapped;
  std::vector<double> p_coarse;
  double dt = 0.0;
};

struct ReductionSpec {
  double mach = 0.5;       // flow-aligned, u0 = mach * c0
  int J = 200;             // fine direct grid on [0, 50]^2
  double domain = 50.0;
  double t_end = 18.0;
  double source_x = 25.0, source_y = 25.0;  // grid coordinates
  double probe_x = 35.0, probe_y = 25.0;
  double cfl_fraction = 0.95;
};

ReductionResult run_reduction(const ReductionSpec& spec);

}  // namespace haway
