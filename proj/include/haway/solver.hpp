#pragma once

#include "haway/flow.hpp"
#include "haway/grid.hpp"
#include "haway/pml.hpp"

namespace haway {

// Time step bound of the explicit staggered scheme,
// dt <= (1/celerity) / sqrt(1/dx^2 + 1/dy^2).
double cfl_limit(const StaggeredGrid& grid, double celerity);

struct SchemeParams {
  double dt = 0.0;
  double sigma_ratio = 0.0;  // dt/dx, the scheme ratio
  double cfl_fraction = 0.95;
};

// dt = cfl_fraction * cfl_limit(grid, celerity).
SchemeParams make_params(const StaggeredGrid& grid, double celerity,
                         double cfl_fraction);

// One leapfrog step of the dimensionless free-space system:
//   p^{n+1}      = p^n - sigma [ (xi_{i+1}-xi_i) + (zeta_{j+1}-zeta_j) ]
//   xi^{n+3/2}   = xi^{n+1/2} - sigma (p_{i+1/2} - p_{i-1/2})
//   zeta^{n+3/2} = zeta^{n+1/2} - sigma (p_{j+1/2} - p_{j-1/2})
// Pressure is updated on both split parts (p_x takes the xi difference,
// p_y the zeta difference). Boundary impulses stay zero (u.n = 0).
void step_free(const StaggeredGrid& grid, FieldSet& fields,
               const SchemeParams& params);

// Same sweep structure with the impulse pressure-gradient coefficient scaled
// by `impulse_gradient_coef`; steps the transformed system whose impulse
// equations read d(xi)/dt + (1-M0^2) dp/dx = 0.
void step_transformed(const StaggeredGrid& grid, FieldSet& fields,
                      const SchemeParams& params, double impulse_gradient_coef);

// Split-field absorbing-layer step with the zero-order terms centered in
// time: damping factors (2 - sigma* dt)/(2 + sigma* dt) and difference
// coefficients 2 sigma/(2 + sigma* dt). With sigma* identically zero this is
// bit-identical to step_free.
void step_pml(const StaggeredGrid& grid, FieldSet& fields,
              const SchemeParams& params, const SigmaProfile& profile);

// Scratch buffers for the advective sweep (the impulse stencils read
// impulse neighbours, so updates write fresh arrays).
struct AdvectiveScratch {
  Field2D xi_old;
  Field2D zeta_old;
};

// Staggered leapfrog step of the advective absorbing-layer system in code
// units (celerity 1, flow entering through the Mach components u0/c0 and
// v0/c0): centered differences for all spatial derivatives, four-neighbour
// means for off-station fields, zero-order self terms centered in time.
// Reduces to step_pml when u0 = v0 = 0.
void step_advective_pml(const StaggeredGrid& grid, FieldSet& fields,
                        const SchemeParams& params,
                        const SigmaProfile& profile, const FlowState& flow,
                        AdvectiveScratch& scratch);
void step_advective_pml(const StaggeredGrid& grid, FieldSet& fields,
                        const SchemeParams& params,
                        const SigmaProfile& profile, const FlowState& flow);

enum class SourceKind { initial_condition, time_forcing };

// Which unknowns receive the excitation.
//   pressure: p_x at cell centers
//   vm2:      xi += d(psi_xy)/dy, zeta -= d(psi_xy)/dx (the curl direction)
//   xi_zeta:  both impulses receive the plain Gaussian
enum class SourceTarget { pressure, xi, zeta, xi_zeta, vm2 };

enum class TimeProfile { constant, sin_pi_t, exp_decay };

struct Source {
  SourceKind kind = SourceKind::time_forcing;
  SourceTarget target = SourceTarget::pressure;
  TimeProfile time_profile = TimeProfile::constant;
  double x = 0.0, y = 0.0;  // centre, grid coordinates
  double width = 9.0;       // Gaussian denominator: exp(-ln2 r^2 / width)
  double amplitude = 1.0;
  double decay_rate = 1.0;  // for exp_decay

  double psi(double t) const;
  double spatial(double px, double py) const;
  double spatial_dx(double px, double py) const;
  double spatial_dy(double px, double py) const;
};

// Additive forcing: adds dt * psi(t_mid) * profile to each target unknown at
// its own station, with t_mid the midpoint of that unknown's update interval
// (t + dt/2 for pressure, t + dt for impulses, t the entire time before the
// step). With hard_set the targets are assigned psi(t_mid) * profile
// instead. An initial-condition source assigns the fields at step 0 only.
// Throws std::invalid_argument when the centre lies outside the domain.
void apply_source(const StaggeredGrid& grid, FieldSet& fields,
                  const Source& source, double t, double dt,
                  bool hard_set = false);

}  // namespace haway
