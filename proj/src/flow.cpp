#include "haway/flow.hpp"

#include <cmath>
#include <stdexcept>

namespace haway {

double FlowState::mach() const {
  return std::sqrt(u0 * u0 + v0 * v0 + w0 * w0) / c0;
}

namespace {

void require_subsonic(const FlowState& flow) {
  if (!(flow.c0 > 0.0)) throw std::domain_error("flow: c0 must be positive");
  if (!(flow.mach() < 1.0))
    throw std::domain_error("flow: sonic or supersonic background flow");
}

}  // namespace

LorentzMap make_map(const FlowState& flow) {
  require_subsonic(flow);
  const double c2 = flow.c0 * flow.c0;
  const double m2 = flow.mach() * flow.mach();
  const double au = std::sqrt(1.0 - flow.u0 * flow.u0 / c2);
  const double av = std::sqrt(1.0 - flow.v0 * flow.v0 / c2);
  const double aw = std::sqrt(1.0 - flow.w0 * flow.w0 / c2);
  LorentzMap map;
  map.ax = 1.0 / au;
  map.ay = 1.0 / av;
  map.az = 1.0 / aw;
  map.tx = flow.u0 / (c2 * (1.0 - m2));
  map.ty = flow.v0 / (c2 * (1.0 - m2));
  map.tz = flow.w0 / (c2 * (1.0 - m2));
  map.alpha = flow.u0 * flow.v0 / (c2 * au * av);
  map.beta = flow.u0 * flow.w0 / (c2 * au * aw);
  map.gamma = flow.v0 * flow.w0 / (c2 * av * aw);
  return map;
}

SpaceTime map_spacetime(const LorentzMap& map, double x, double y, double t) {
  return {map.ax * x, map.ay * y, t + map.tx * x + map.ty * y};
}

SpaceTime inverse_map(const LorentzMap& map, double xp, double yp, double tp) {
  const double x = xp / map.ax;
  const double y = yp / map.ay;
  return {x, y, tp - map.tx * x - map.ty * y};
}

Acoustic2 to_tilde(const LorentzMap& map, const FlowState& flow, double p,
                   double xi, double zeta) {
  (void)map;
  const double c2 = flow.c0 * flow.c0;
  const double q = 1.0 - (flow.u0 * flow.u0 + flow.v0 * flow.v0) / c2;
  const double au = std::sqrt(1.0 - flow.u0 * flow.u0 / c2);
  const double av = std::sqrt(1.0 - flow.v0 * flow.v0 / c2);
  const double uv = flow.u0 * flow.v0 / c2;
  Acoustic2 out;
  out.p = p + (flow.u0 * xi + flow.v0 * zeta) / q;
  out.xi = au * ((1.0 - flow.v0 * flow.v0 / c2) * xi + uv * zeta) / q;
  out.zeta = av * (uv * xi + (1.0 - flow.u0 * flow.u0 / c2) * zeta) / q;
  return out;
}

Acoustic2 from_tilde(const LorentzMap& map, const FlowState& flow, double p,
                     double xi, double zeta) {
  const double c2 = flow.c0 * flow.c0;
  const double q = 1.0 - (flow.u0 * flow.u0 + flow.v0 * flow.v0) / c2;
  const double au = std::sqrt(1.0 - flow.u0 * flow.u0 / c2);
  const double av = std::sqrt(1.0 - flow.v0 * flow.v0 / c2);
  Acoustic2 out;
  out.xi = au * (xi - map.alpha * zeta);
  out.zeta = av * (zeta - map.alpha * xi);
  out.p = p - (flow.u0 * out.xi + flow.v0 * out.zeta) / q;
  return out;
}

Acoustic3 to_tilde_3d(const FlowState& flow, double p, double xi, double zeta,
                      double chi) {
  require_subsonic(flow);
  const double c2 = flow.c0 * flow.c0;
  const double u2 = flow.u0 * flow.u0, v2 = flow.v0 * flow.v0,
               w2 = flow.w0 * flow.w0;
  const double q = 1.0 - (u2 + v2 + w2) / c2;
  const double au = std::sqrt(1.0 - u2 / c2);
  const double av = std::sqrt(1.0 - v2 / c2);
  const double aw = std::sqrt(1.0 - w2 / c2);
  const double uv = flow.u0 * flow.v0 / c2;
  const double uw = flow.u0 * flow.w0 / c2;
  const double vw = flow.v0 * flow.w0 / c2;
  Acoustic3 out;
  out.p = p + (flow.u0 * xi + flow.v0 * zeta + flow.w0 * chi) / q;
  out.xi = au * ((1.0 - (v2 + w2) / c2) * xi + uv * zeta + uw * chi) / q;
  out.zeta = av * (uv * xi + (1.0 - (u2 + w2) / c2) * zeta + vw * chi) / q;
  out.chi = aw * (uw * xi + vw * zeta + (1.0 - (u2 + v2) / c2) * chi) / q;
  return out;
}

Acoustic3 from_tilde_3d(const FlowState& flow, double p, double xi,
                        double zeta, double chi) {
  require_subsonic(flow);
  const double c2 = flow.c0 * flow.c0;
  const double u2 = flow.u0 * flow.u0, v2 = flow.v0 * flow.v0,
               w2 = flow.w0 * flow.w0;
  const double q = 1.0 - (u2 + v2 + w2) / c2;
  const double au = std::sqrt(1.0 - u2 / c2);
  const double av = std::sqrt(1.0 - v2 / c2);
  const double aw = std::sqrt(1.0 - w2 / c2);
  const double alpha = flow.u0 * flow.v0 / (c2 * au * av);
  const double beta = flow.u0 * flow.w0 / (c2 * au * aw);
  const double gamma = flow.v0 * flow.w0 / (c2 * av * aw);
  Acoustic3 out;
  out.xi = au * (xi - alpha * zeta - beta * chi);
  out.zeta = av * (zeta - alpha * xi - gamma * chi);
  out.chi = aw * (chi - beta * xi - gamma * zeta);
  out.p = p - (flow.u0 * out.xi + flow.v0 * out.zeta + flow.w0 * out.chi) / q;
  return out;
}

double modified_celerity(const FlowState& flow) {
  require_subsonic(flow);
  const double m = flow.mach();
  return flow.c0 * std::sqrt(1.0 - m * m);
}

namespace {

// Mean of the up-to-four staggered neighbours of the partner impulse field
// around a xi station (i, j+1/2); clamps at the domain edge.
double zeta_at_xi_station(const Field2D& zeta, int i, int j) {
  const int il = i > 0 ? i - 1 : i;
  const int ir = i < zeta.nx() ? i : i - 1;
  return 0.25 * (zeta(il, j) + zeta(ir, j) + zeta(il, j + 1) + zeta(ir, j + 1));
}

double xi_at_zeta_station(const Field2D& xi, int i, int j) {
  const int jb = j > 0 ? j - 1 : j;
  const int jt = j < xi.ny() ? j : j - 1;
  return 0.25 * (xi(i, jb) + xi(i + 1, jb) + xi(i, jt) + xi(i + 1, jt));
}

template <typename F>
FieldSet transform_fields(const StaggeredGrid& grid, const FieldSet& in,
                          F&& point_map) {
  FieldSet out = zero_fields(grid);
  out.time_level = in.time_level;
  const int J = grid.J;
  for (int j = 0; j < J; ++j)
    for (int i = 0; i < J; ++i) {
      const double xi_c = 0.5 * (in.xi(i, j) + in.xi(i + 1, j));
      const double ze_c = 0.5 * (in.zeta(i, j) + in.zeta(i, j + 1));
      Acoustic2 t = point_map(in.pressure(i, j), xi_c, ze_c);
      out.p_x(i, j) = t.p;
    }
  for (int j = 0; j < J; ++j)
    for (int i = 0; i <= J; ++i) {
      Acoustic2 t = point_map(0.0, in.xi(i, j), zeta_at_xi_station(in.zeta, i, j));
      out.xi(i, j) = t.xi;
    }
  for (int j = 0; j <= J; ++j)
    for (int i = 0; i < J; ++i) {
      Acoustic2 t = point_map(0.0, xi_at_zeta_station(in.xi, i, j), in.zeta(i, j));
      out.zeta(i, j) = t.zeta;
    }
  return out;
}

}  // namespace

FieldSet to_tilde_fields(const LorentzMap& map, const FlowState& flow,
                         const StaggeredGrid& grid, const FieldSet& fields) {
  return transform_fields(grid, fields, [&](double p, double xi, double zeta) {
    return to_tilde(map, flow, p, xi, zeta);
  });
}

FieldSet from_tilde_fields(const LorentzMap& map, const FlowState& flow,
                           const StaggeredGrid& grid, const FieldSet& fields) {
  return transform_fields(grid, fields, [&](double p, double xi, double zeta) {
    return from_tilde(map, flow, p, xi, zeta);
  });
}

void TwoLevelInterpolator::push(double t, double value) {
  t0_ = t1_;
  v0_ = v1_;
  t1_ = t;
  v1_ = value;
  ++count_;
}

double TwoLevelInterpolator::at(double t) const {
  if (count_ < 2) throw std::logic_error("interpolator: need two levels");
  const double w = (t - t0_) / (t1_ - t0_);
  return v0_ + w * (v1_ - v0_);
}

}  // namespace haway
