#pragma once

#include "haway/grid.hpp"

namespace haway {

// Prescribed uniform subsonic background flow (w0 = 0 in two dimensions).
struct FlowState {
  double u0 = 0.0;
  double v0 = 0.0;
  double w0 = 0.0;
  double c0 = 1.0;
  double rho0 = 1.0;

  double mach() const;
};

// Coefficients of the space-time dilation
//   x' = ax x,  y' = ay y,  z' = az z,  t' = t + tx x + ty y + tz z
// together with the coupling coefficients of the change of unknowns.
// At zero flow the map is the identity.
struct LorentzMap {
  double ax = 1.0, ay = 1.0, az = 1.0;
  double tx = 0.0, ty = 0.0, tz = 0.0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

// Throws std::domain_error for sonic or supersonic flow.
LorentzMap make_map(const FlowState& flow);

struct SpaceTime {
  double x, y, t;
};

SpaceTime map_spacetime(const LorentzMap& map, double x, double y, double t);
SpaceTime inverse_map(const LorentzMap& map, double xp, double yp, double tp);

// (p, xi, zeta) value triple; primed or tilde depending on context.
struct Acoustic2 {
  double p, xi, zeta;
};

Acoustic2 to_tilde(const LorentzMap& map, const FlowState& flow, double p,
                   double xi, double zeta);
Acoustic2 from_tilde(const LorentzMap& map, const FlowState& flow, double p,
                     double xi, double zeta);

struct Acoustic3 {
  double p, xi, zeta, chi;
};

Acoustic3 to_tilde_3d(const FlowState& flow, double p, double xi, double zeta,
                      double chi);
Acoustic3 from_tilde_3d(const FlowState& flow, double p, double xi,
                        double zeta, double chi);

// Propagation speed in transformed coordinates: c0 sqrt(1 - M0^2).
double modified_celerity(const FlowState& flow);

// Whole-field application of the change of unknowns. Coefficients are
// constant so the map acts pointwise; partner values needed off their own
// station (zeta at a xi station and vice versa, impulses at cell centers)
// are taken as the mean of the nearest staggered neighbours.
FieldSet to_tilde_fields(const LorentzMap& map, const FlowState& flow,
                         const StaggeredGrid& grid, const FieldSet& fields);
FieldSet from_tilde_fields(const LorentzMap& map, const FlowState& flow,
                           const StaggeredGrid& grid, const FieldSet& fields);

// Keeps the two most recent (t, value) levels and evaluates linearly in
// between; used to resample a transformed-time series onto fixed original
// times.
class TwoLevelInterpolator {
 public:
  void push(double t, double value);
  bool ready() const { return count_ >= 2; }
  // Linear interpolation/extrapolation on the two stored levels.
  double at(double t) const;
  double newest_time() const { return t1_; }

 private:
  double t0_ = 0.0, v0_ = 0.0;
  double t1_ = 0.0, v1_ = 0.0;
  int count_ = 0;
};

}  // namespace haway
