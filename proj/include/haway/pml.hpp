#pragma once

#include <iosfwd>
#include <vector>

#include "haway/flow.hpp"
#include "haway/grid.hpp"

namespace haway {

// Absorbing-coefficient samplings at both kinds of station in each
// direction: sigma_x_centers[i] is sigma*_x at x = (i+1/2) dx (feeds the
// pressure equations), sigma_x_edges[i] is sigma*_x at x = i dx (feeds the
// impulse equations); likewise in y. Zero on the whole interior, vanishing
// at the interface for the polynomial ramp, nonnegative and nondecreasing
// toward the outer boundary within each layer.
struct SigmaProfile {
  std::vector<double> sigma_x_centers;  // size J
  std::vector<double> sigma_x_edges;    // size J+1
  std::vector<double> sigma_y_centers;  // size J
  std::vector<double> sigma_y_edges;    // size J+1
  double sigma_max = 0.0;
  int ramp_exponent = 1;
};

// sigma*(d) = sigma_max (d/delta)^exponent with d the depth into the layer
// measured from the interface.
SigmaProfile polynomial_profile(const StaggeredGrid& grid, double sigma_max,
                                int ramp_exponent);

// sigma* = sigma_value at every station strictly inside the layers, zero in
// the interior. Discontinuous at the interface; exists to reproduce the
// constant-coefficient mathematical experiments.
SigmaProfile constant_profile(const StaggeredGrid& grid, double sigma_value);

SigmaProfile zero_profile(const StaggeredGrid& grid);

// Continuous-time right-hand sides d(field)/dt on the staggered stations.
// Entries on Dirichlet boundary rows (xi at i=0,J; zeta at j=0,J) are zero.
struct FieldDerivs {
  Field2D p_x, p_y, xi, zeta;
};

// Split-field system without flow:
//   dp_x/dt = -sigma*_x p_x - c0^2 dxi/dx        (and y alike)
//   dxi/dt  = -sigma*_x xi  - d(p_x+p_y)/dx      (and y alike)
FieldDerivs pml_rhs_no_flow(const StaggeredGrid& grid, const FieldSet& fields,
                            const SigmaProfile& profile,
                            const FlowState& flow);

// Advective split-field system for subsonic flow (u0, v0): all zero-order
// couplings in sigma*, u0, v0 plus the advective flux derivatives. Values a
// term needs off its own station come from the mean of the nearest staggered
// neighbours. With u0 = v0 = 0 this is pml_rhs_no_flow with sigma* scaled
// by c0.
FieldDerivs pml_rhs_advective(const StaggeredGrid& grid,
                              const FieldSet& fields,
                              const SigmaProfile& profile,
                              const FlowState& flow);

// CSV: station index, position, sigma*_x(center), sigma*_x(edge),
// sigma*_y(center), sigma*_y(edge).
void dump_profile_csv(std::ostream& os, const StaggeredGrid& grid,
                      const SigmaProfile& profile);

}  // namespace haway
