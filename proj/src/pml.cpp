#include "haway/pml.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace haway {

namespace {

// Depth into the nearer layer measured from the interface; 0 in the interior.
double layer_depth(double pos, double L, double delta) {
  if (delta <= 0.0) return 0.0;
  if (pos < delta) return delta - pos;
  if (pos > L - delta) return pos - (L - delta);
  return 0.0;
}

void fill_polynomial(std::vector<double>& centers, std::vector<double>& edges,
                     const StaggeredGrid& grid, double delta, double sigma_max,
                     int exponent) {
  const int J = grid.J;
  centers.assign(J, 0.0);
  edges.assign(J + 1, 0.0);
  if (delta <= 0.0) return;
  for (int i = 0; i < J; ++i) {
    const double d = layer_depth(grid.center(i), grid.L, delta);
    if (d > 0.0) centers[i] = sigma_max * std::pow(d / delta, exponent);
  }
  for (int i = 0; i <= J; ++i) {
    const double d = layer_depth(grid.edge(i), grid.L, delta);
    if (d > 0.0) edges[i] = sigma_max * std::pow(d / delta, exponent);
  }
}

void fill_constant(std::vector<double>& centers, std::vector<double>& edges,
                   const StaggeredGrid& grid, double delta, double value) {
  const int J = grid.J;
  centers.assign(J, 0.0);
  edges.assign(J + 1, 0.0);
  if (delta <= 0.0) return;
  for (int i = 0; i < J; ++i)
    if (layer_depth(grid.center(i), grid.L, delta) > 0.0) centers[i] = value;
  for (int i = 0; i <= J; ++i)
    if (layer_depth(grid.edge(i), grid.L, delta) > 0.0) edges[i] = value;
}

}  // namespace

SigmaProfile polynomial_profile(const StaggeredGrid& grid, double sigma_max,
                                int ramp_exponent) {
  if (sigma_max < 0.0)
    throw std::invalid_argument("profile: sigma_max must be >= 0");
  if (ramp_exponent < 1)
    throw std::invalid_argument("profile: ramp exponent must be >= 1");
  SigmaProfile p;
  p.sigma_max = sigma_max;
  p.ramp_exponent = ramp_exponent;
  fill_polynomial(p.sigma_x_centers, p.sigma_x_edges, grid, grid.layer_x(),
                  sigma_max, ramp_exponent);
  fill_polynomial(p.sigma_y_centers, p.sigma_y_edges, grid, grid.layer_y(),
                  sigma_max, ramp_exponent);
  return p;
}

SigmaProfile constant_profile(const StaggeredGrid& grid, double sigma_value) {
  if (sigma_value < 0.0)
    throw std::invalid_argument("profile: sigma must be >= 0");
  SigmaProfile p;
  p.sigma_max = sigma_value;
  p.ramp_exponent = 0;
  fill_constant(p.sigma_x_centers, p.sigma_x_edges, grid, grid.layer_x(),
                sigma_value);
  fill_constant(p.sigma_y_centers, p.sigma_y_edges, grid, grid.layer_y(),
                sigma_value);
  return p;
}

SigmaProfile zero_profile(const StaggeredGrid& grid) {
  return polynomial_profile(grid, 0.0, 1);
}

FieldDerivs pml_rhs_no_flow(const StaggeredGrid& grid, const FieldSet& f,
                            const SigmaProfile& s, const FlowState& flow) {
  const int J = grid.J;
  const double c2 = flow.c0 * flow.c0;
  const double inv_dx = 1.0 / grid.dx;
  const double inv_dy = 1.0 / grid.dy;
  FieldDerivs d;
  d.p_x = Field2D(J, J);
  d.p_y = Field2D(J, J);
  d.xi = Field2D(J + 1, J);
  d.zeta = Field2D(J, J + 1);

  for (int j = 0; j < J; ++j)
    for (int i = 0; i < J; ++i) {
      d.p_x(i, j) = -s.sigma_x_centers[i] * f.p_x(i, j) -
                    c2 * (f.xi(i + 1, j) - f.xi(i, j)) * inv_dx;
      d.p_y(i, j) = -s.sigma_y_centers[j] * f.p_y(i, j) -
                    c2 * (f.zeta(i, j + 1) - f.zeta(i, j)) * inv_dy;
    }
  for (int j = 0; j < J; ++j)
    for (int i = 1; i < J; ++i)
      d.xi(i, j) = -s.sigma_x_edges[i] * f.xi(i, j) -
                   (f.pressure(i, j) - f.pressure(i - 1, j)) * inv_dx;
  for (int j = 1; j < J; ++j)
    for (int i = 0; i < J; ++i)
      d.zeta(i, j) = -s.sigma_y_edges[j] * f.zeta(i, j) -
                     (f.pressure(i, j) - f.pressure(i, j - 1)) * inv_dy;
  return d;
}

FieldDerivs pml_rhs_advective(const StaggeredGrid& grid, const FieldSet& f,
                              const SigmaProfile& s, const FlowState& flow) {
  const int J = grid.J;
  const double u0 = flow.u0, v0 = flow.v0, c0 = flow.c0;
  const double c2 = c0 * c0;
  const double m0 = flow.mach();
  if (!(m0 < 1.0))
    throw std::domain_error("pml: advective system needs subsonic flow");
  const double q = 1.0 - m0 * m0;
  const double g = std::sqrt(q);
  const double inv_dx = 1.0 / grid.dx;
  const double inv_dy = 1.0 / grid.dy;

  FieldDerivs d;
  d.p_x = Field2D(J, J);
  d.p_y = Field2D(J, J);
  d.xi = Field2D(J + 1, J);
  d.zeta = Field2D(J, J + 1);

  // Pressure equations: self damping, impulse cross term, flux derivative.
  for (int j = 0; j < J; ++j)
    for (int i = 0; i < J; ++i) {
      const double xi_c = 0.5 * (f.xi(i, j) + f.xi(i + 1, j));
      const double ze_c = 0.5 * (f.zeta(i, j) + f.zeta(i, j + 1));
      d.p_x(i, j) = -c0 * g * s.sigma_x_centers[i] * f.p_x(i, j) -
                    (c0 * u0 / g) * s.sigma_x_centers[i] * xi_c -
                    c2 * (f.xi(i + 1, j) - f.xi(i, j)) * inv_dx;
      d.p_y(i, j) = -c0 * g * s.sigma_y_centers[j] * f.p_y(i, j) -
                    (c0 * v0 / g) * s.sigma_y_centers[j] * ze_c -
                    c2 * (f.zeta(i, j + 1) - f.zeta(i, j)) * inv_dy;
    }

  const double rate_xi = c0 * (1.0 + (u0 * u0 - v0 * v0) / c2) / g;
  const double rate_ze = c0 * (1.0 + (v0 * v0 - u0 * u0) / c2) / g;
  const double cross_uv = u0 * v0 / (c0 * g);

  for (int j = 0; j < J; ++j)
    for (int i = 1; i < J; ++i) {
      const double zr = f.zeta(i, j) + f.zeta(i, j + 1);
      const double zl = f.zeta(i - 1, j) + f.zeta(i - 1, j + 1);
      const double zt = f.zeta(i - 1, j + 1) + f.zeta(i, j + 1);
      const double zb = f.zeta(i - 1, j) + f.zeta(i, j);
      const double z4 = 0.25 * (zr + zl);
      const double px_c = 0.5 * (f.p_x(i - 1, j) + f.p_x(i, j));
      const double py_c = 0.5 * (f.p_y(i - 1, j) + f.p_y(i, j));
      const double sx = s.sigma_x_edges[i];
      const double sy = s.sigma_y_centers[j];
      d.xi(i, j) =
          -(u0 * (f.xi(i + 1, j) - f.xi(i - 1, j)) * inv_dx +
            v0 * 0.5 * (zr - zl) * inv_dx) -
          q * (f.pressure(i, j) - f.pressure(i - 1, j)) * inv_dx -
          u0 * 0.5 * (zt - zb) * inv_dy - rate_xi * sx * f.xi(i, j) -
          (u0 * g / c0) * (sx * px_c + sy * py_c) - cross_uv * (sx + sy) * z4;
    }

  for (int j = 1; j < J; ++j)
    for (int i = 0; i < J; ++i) {
      const double xt = f.xi(i, j) + f.xi(i + 1, j);
      const double xb = f.xi(i, j - 1) + f.xi(i + 1, j - 1);
      const double xr = f.xi(i + 1, j - 1) + f.xi(i + 1, j);
      const double xl = f.xi(i, j - 1) + f.xi(i, j);
      const double x4 = 0.25 * (xt + xb);
      const double px_c = 0.5 * (f.p_x(i, j - 1) + f.p_x(i, j));
      const double py_c = 0.5 * (f.p_y(i, j - 1) + f.p_y(i, j));
      const double sx = s.sigma_x_centers[i];
      const double sy = s.sigma_y_edges[j];
      d.zeta(i, j) =
          -(v0 * 0.5 * (xr - xl) * inv_dx +
            v0 * (f.zeta(i, j + 1) - f.zeta(i, j - 1)) * inv_dy +
            u0 * 0.5 * (xt - xb) * inv_dy) -
          q * (f.pressure(i, j) - f.pressure(i, j - 1)) * inv_dy -
          rate_ze * sy * f.zeta(i, j) -
          (v0 * g / c0) * (sx * px_c + sy * py_c) - cross_uv * (sx + sy) * x4;
    }
  return d;
}

void dump_profile_csv(std::ostream& os, const StaggeredGrid& grid,
                      const SigmaProfile& s) {
  os << "station,x_center,sigma_x_center,x_edge,sigma_x_edge,"
        "y_center,sigma_y_center,y_edge,sigma_y_edge\n";
  for (int i = 0; i <= grid.J; ++i) {
    os << i << ',';
    if (i < grid.J)
      os << grid.center(i) << ',' << s.sigma_x_centers[i] << ',';
    else
      os << ",,";
    os << grid.edge(i) << ',' << s.sigma_x_edges[i] << ',';
    if (i < grid.J)
      os << grid.center(i) << ',' << s.sigma_y_centers[i] << ',';
    else
      os << ",,";
    os << grid.edge(i) << ',' << s.sigma_y_edges[i] << '\n';
  }
}

}  // namespace haway
