#include "haway/solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace haway {

double cfl_limit(const StaggeredGrid& grid, double celerity) {
  if (!(celerity > 0.0))
    throw std::invalid_argument("cfl: celerity must be positive");
  const double root =
      std::sqrt(1.0 / (grid.dx * grid.dx) + 1.0 / (grid.dy * grid.dy));
  return 1.0 / (celerity * root);
}

SchemeParams make_params(const StaggeredGrid& grid, double celerity,
                         double cfl_fraction) {
  if (!(cfl_fraction > 0.0))
    throw std::invalid_argument("scheme: cfl_fraction must be positive");
  SchemeParams p;
  p.cfl_fraction = cfl_fraction;
  p.dt = cfl_fraction * cfl_limit(grid, celerity);
  p.sigma_ratio = p.dt / grid.dx;
  return p;
}

void step_free(const StaggeredGrid& grid, FieldSet& f,
               const SchemeParams& params) {
  const int J = grid.J;
  const double sig = params.sigma_ratio;
  for (int j = 0; j < J; ++j)
    for (int i = 0; i < J; ++i) {
      f.p_x(i, j) = f.p_x(i, j) - sig * (f.xi(i + 1, j) - f.xi(i, j));
      f.p_y(i, j) = f.p_y(i, j) - sig * (f.zeta(i, j + 1) - f.zeta(i, j));
    }
  for (int j = 0; j < J; ++j)
    for (int i = 1; i < J; ++i)
      f.xi(i, j) =
          f.xi(i, j) - sig * (f.pressure(i, j) - f.pressure(i - 1, j));
  for (int j = 1; j < J; ++j)
    for (int i = 0; i < J; ++i)
      f.zeta(i, j) =
          f.zeta(i, j) - sig * (f.pressure(i, j) - f.pressure(i, j - 1));
  ++f.time_level;
}

void step_transformed(const StaggeredGrid& grid, FieldSet& f,
                      const SchemeParams& params,
                      double impulse_gradient_coef) {
  const int J = grid.J;
  const double sig = params.sigma_ratio;
  const double sig_u = impulse_gradient_coef * sig;
  for (int j = 0; j < J; ++j)
    for (int i = 0; i < J; ++i) {
      f.p_x(i, j) = f.p_x(i, j) - sig * (f.xi(i + 1, j) - f.xi(i, j));
      f.p_y(i, j) = f.p_y(i, j) - sig * (f.zeta(i, j + 1) - f.zeta(i, j));
    }
  for (int j = 0; j < J; ++j)
    for (int i = 1; i < J; ++i)
      f.xi(i, j) =
          f.xi(i, j) - sig_u * (f.pressure(i, j) - f.pressure(i - 1, j));
  for (int j = 1; j < J; ++j)
    for (int i = 0; i < J; ++i)
      f.zeta(i, j) =
          f.zeta(i, j) - sig_u * (f.pressure(i, j) - f.pressure(i, j - 1));
  ++f.time_level;
}

namespace {

// Time-centered zero-order coefficients: field <- damp*field - coef*diff
// with damp = (2 - s dt)/(2 + s dt), coef = 2 sigma/(2 + s dt). At s = 0
// these are exactly 1 and sigma.
struct CenteredCoefs {
  std::vector<double> damp;
  std::vector<double> coef;
};

CenteredCoefs centered_coefs(const std::vector<double>& sigma, double dt,
                             double sig_ratio) {
  CenteredCoefs c;
  c.damp.resize(sigma.size());
  c.coef.resize(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const double sdt = sigma[k] * dt;
    c.damp[k] = (2.0 - sdt) / (2.0 + sdt);
    c.coef[k] = 2.0 * sig_ratio / (2.0 + sdt);
  }
  return c;
}

}  // namespace

void step_pml(const StaggeredGrid& grid, FieldSet& f,
              const SchemeParams& params, const SigmaProfile& s) {
  const int J = grid.J;
  const double dt = params.dt;
  const double sig = params.sigma_ratio;
  const CenteredCoefs px = centered_coefs(s.sigma_x_centers, dt, sig);
  const CenteredCoefs py = centered_coefs(s.sigma_y_centers, dt, sig);
  const CenteredCoefs ex = centered_coefs(s.sigma_x_edges, dt, sig);
  const CenteredCoefs ey = centered_coefs(s.sigma_y_edges, dt, sig);

  for (int j = 0; j < J; ++j)
    for (int i = 0; i < J; ++i) {
      f.p_x(i, j) =
          px.damp[i] * f.p_x(i, j) - px.coef[i] * (f.xi(i + 1, j) - f.xi(i, j));
      f.p_y(i, j) = py.damp[j] * f.p_y(i, j) -
                    py.coef[j] * (f.zeta(i, j + 1) - f.zeta(i, j));
    }
  for (int j = 0; j < J; ++j)
    for (int i = 1; i < J; ++i)
      f.xi(i, j) = ex.damp[i] * f.xi(i, j) -
                   ex.coef[i] * (f.pressure(i, j) - f.pressure(i - 1, j));
  for (int j = 1; j < J; ++j)
    for (int i = 0; i < J; ++i)
      f.zeta(i, j) = ey.damp[j] * f.zeta(i, j) -
                     ey.coef[j] * (f.pressure(i, j) - f.pressure(i, j - 1));
  ++f.time_level;
}

void step_advective_pml(const StaggeredGrid& grid, FieldSet& f,
                        const SchemeParams& params, const SigmaProfile& s,
                        const FlowState& flow, AdvectiveScratch& scratch) {
  const int J = grid.J;
  const double dt = params.dt;
  const double sig = params.sigma_ratio;
  const double m = flow.u0 / flow.c0;
  const double n = flow.v0 / flow.c0;
  const double m0sq = m * m + n * n;
  if (!(m0sq < 1.0))
    throw std::domain_error("solver: advective step needs subsonic flow");
  const double q = 1.0 - m0sq;
  const double g = std::sqrt(q);
  const double inv_dx = 1.0 / grid.dx;
  const double inv_dy = 1.0 / grid.dy;

  // Per-station coefficients. Self rates follow the advective system:
  // g sigma* on the pressures, (1 +- (m^2 - n^2))/g sigma* on the impulses.
  const int nxc = J, nxe = J + 1;
  std::vector<double> apx(nxc), bpx(nxc), xpx(nxc);
  std::vector<double> apy(nxc), bpy(nxc), ypy(nxc);
  for (int i = 0; i < J; ++i) {
    const double sdt = g * s.sigma_x_centers[i] * dt;
    apx[i] = (2.0 - sdt) / (2.0 + sdt);
    bpx[i] = 2.0 * sig / (2.0 + sdt);
    xpx[i] = 2.0 * dt * (m / g) * s.sigma_x_centers[i] / (2.0 + sdt);
  }
  for (int j = 0; j < J; ++j) {
    const double sdt = g * s.sigma_y_centers[j] * dt;
    apy[j] = (2.0 - sdt) / (2.0 + sdt);
    bpy[j] = 2.0 * sig / (2.0 + sdt);
    ypy[j] = 2.0 * dt * (n / g) * s.sigma_y_centers[j] / (2.0 + sdt);
  }
  const double rate_xi = (1.0 + (m * m - n * n)) / g;
  const double rate_ze = (1.0 + (n * n - m * m)) / g;
  std::vector<double> axi(nxe), bxi(nxe), cxi(nxe);
  for (int i = 0; i <= J; ++i) {
    const double sdt = rate_xi * s.sigma_x_edges[i] * dt;
    axi[i] = (2.0 - sdt) / (2.0 + sdt);
    bxi[i] = q * (2.0 * sig / (2.0 + sdt));
    cxi[i] = 2.0 * dt / (2.0 + sdt);
  }
  std::vector<double> aze(nxe), bze(nxe), cze(nxe);
  for (int j = 0; j <= J; ++j) {
    const double sdt = rate_ze * s.sigma_y_edges[j] * dt;
    aze[j] = (2.0 - sdt) / (2.0 + sdt);
    bze[j] = q * (2.0 * sig / (2.0 + sdt));
    cze[j] = 2.0 * dt / (2.0 + sdt);
  }

  // Pressure sweep (reads impulses at n+1/2 only; in place).
  for (int j = 0; j < J; ++j)
    for (int i = 0; i < J; ++i) {
      const double xi_c = 0.5 * (f.xi(i, j) + f.xi(i + 1, j));
      const double ze_c = 0.5 * (f.zeta(i, j) + f.zeta(i, j + 1));
      f.p_x(i, j) = apx[i] * f.p_x(i, j) -
                    bpx[i] * (f.xi(i + 1, j) - f.xi(i, j)) - xpx[i] * xi_c;
      f.p_y(i, j) = apy[j] * f.p_y(i, j) -
                    bpy[j] * (f.zeta(i, j + 1) - f.zeta(i, j)) - ypy[j] * ze_c;
    }

  // Impulse sweep reads old impulse neighbours: keep copies.
  scratch.xi_old = f.xi;
  scratch.zeta_old = f.zeta;
  const Field2D& xo = scratch.xi_old;
  const Field2D& zo = scratch.zeta_old;
  const double mg = m * g;
  const double ng = n * g;
  const double cross_uv = m * n / g;

  for (int j = 0; j < J; ++j)
    for (int i = 1; i < J; ++i) {
      const double zr = zo(i, j) + zo(i, j + 1);
      const double zl = zo(i - 1, j) + zo(i - 1, j + 1);
      const double zt = zo(i - 1, j + 1) + zo(i, j + 1);
      const double zb = zo(i - 1, j) + zo(i, j);
      const double z4 = 0.25 * (zr + zl);
      const double px_c = 0.5 * (f.p_x(i - 1, j) + f.p_x(i, j));
      const double py_c = 0.5 * (f.p_y(i - 1, j) + f.p_y(i, j));
      const double sx = s.sigma_x_edges[i];
      const double sy = s.sigma_y_centers[j];
      const double extra = m * (xo(i + 1, j) - xo(i - 1, j)) * inv_dx +
                           n * 0.5 * (zr - zl) * inv_dx +
                           m * 0.5 * (zt - zb) * inv_dy +
                           mg * (sx * px_c + sy * py_c) +
                           cross_uv * (sx + sy) * z4;
      f.xi(i, j) = axi[i] * xo(i, j) -
                   bxi[i] * (f.pressure(i, j) - f.pressure(i - 1, j)) -
                   cxi[i] * extra;
    }

  for (int j = 1; j < J; ++j)
    for (int i = 0; i < J; ++i) {
      const double xt = xo(i, j) + xo(i + 1, j);
      const double xb = xo(i, j - 1) + xo(i + 1, j - 1);
      const double xr = xo(i + 1, j - 1) + xo(i + 1, j);
      const double xl = xo(i, j - 1) + xo(i, j);
      const double x4 = 0.25 * (xt + xb);
      const double px_c = 0.5 * (f.p_x(i, j - 1) + f.p_x(i, j));
      const double py_c = 0.5 * (f.p_y(i, j - 1) + f.p_y(i, j));
      const double sx = s.sigma_x_centers[i];
      const double sy = s.sigma_y_edges[j];
      const double extra = n * 0.5 * (xr - xl) * inv_dx +
                           n * (zo(i, j + 1) - zo(i, j - 1)) * inv_dy +
                           m * 0.5 * (xt - xb) * inv_dy +
                           ng * (sx * px_c + sy * py_c) +
                           cross_uv * (sx + sy) * x4;
      f.zeta(i, j) = aze[j] * zo(i, j) -
                     bze[j] * (f.pressure(i, j) - f.pressure(i, j - 1)) -
                     cze[j] * extra;
    }
  ++f.time_level;
}

void step_advective_pml(const StaggeredGrid& grid, FieldSet& fields,
                        const SchemeParams& params, const SigmaProfile& s,
                        const FlowState& flow) {
  AdvectiveScratch scratch;
  step_advective_pml(grid, fields, params, s, flow, scratch);
}

double Source::psi(double t) const {
  switch (time_profile) {
    case TimeProfile::constant:
      return 1.0;
    case TimeProfile::sin_pi_t:
      return std::sin(std::numbers::pi * t);
    case TimeProfile::exp_decay:
      return std::exp(-decay_rate * t);
  }
  return 1.0;
}

double Source::spatial(double px, double py) const {
  const double r2 = (px - x) * (px - x) + (py - y) * (py - y);
  return amplitude * std::exp(-std::numbers::ln2 * r2 / width);
}

double Source::spatial_dx(double px, double py) const {
  return -2.0 * std::numbers::ln2 * (px - x) / width * spatial(px, py);
}

double Source::spatial_dy(double px, double py) const {
  return -2.0 * std::numbers::ln2 * (py - y) / width * spatial(px, py);
}

void apply_source(const StaggeredGrid& grid, FieldSet& f, const Source& src,
                  double t, double dt, bool hard_set) {
  if (src.x < 0.0 || src.x > grid.L || src.y < 0.0 || src.y > grid.L)
    throw std::invalid_argument("source: centre lies outside the domain");
  const int J = grid.J;

  if (src.kind == SourceKind::initial_condition) {
    if (f.time_level != 0) return;
    const auto set_impulses = [&](bool curl) {
      for (int j = 0; j < J; ++j)
        for (int i = 1; i < J; ++i) {
          const double px = grid.edge(i), py = grid.center(j);
          f.xi(i, j) = curl ? src.spatial_dy(px, py) : src.spatial(px, py);
        }
      for (int j = 1; j < J; ++j)
        for (int i = 0; i < J; ++i) {
          const double px = grid.center(i), py = grid.edge(j);
          f.zeta(i, j) = curl ? -src.spatial_dx(px, py) : src.spatial(px, py);
        }
    };
    switch (src.target) {
      case SourceTarget::pressure:
        for (int j = 0; j < J; ++j)
          for (int i = 0; i < J; ++i)
            f.p_x(i, j) = src.spatial(grid.center(i), grid.center(j));
        break;
      case SourceTarget::vm2:
        set_impulses(true);
        break;
      case SourceTarget::xi_zeta:
        set_impulses(false);
        break;
      case SourceTarget::xi:
        for (int j = 0; j < J; ++j)
          for (int i = 1; i < J; ++i)
            f.xi(i, j) = src.spatial(grid.edge(i), grid.center(j));
        break;
      case SourceTarget::zeta:
        for (int j = 1; j < J; ++j)
          for (int i = 0; i < J; ++i)
            f.zeta(i, j) = src.spatial(grid.center(i), grid.edge(j));
        break;
    }
    return;
  }

  // Time forcing. Update midpoints: pressures t+dt/2, impulses t+dt.
  const double wp = src.psi(t + 0.5 * dt);
  const double wi = src.psi(t + dt);
  const auto add = [&](double& field, double w, double value) {
    if (hard_set)
      field = w * value;
    else
      field += dt * w * value;
  };
  switch (src.target) {
    case SourceTarget::pressure:
      for (int j = 0; j < J; ++j)
        for (int i = 0; i < J; ++i)
          add(f.p_x(i, j), wp, src.spatial(grid.center(i), grid.center(j)));
      break;
    case SourceTarget::vm2:
      for (int j = 0; j < J; ++j)
        for (int i = 1; i < J; ++i)
          add(f.xi(i, j), wi, src.spatial_dy(grid.edge(i), grid.center(j)));
      for (int j = 1; j < J; ++j)
        for (int i = 0; i < J; ++i)
          add(f.zeta(i, j), wi, -src.spatial_dx(grid.center(i), grid.edge(j)));
      break;
    case SourceTarget::xi_zeta:
      for (int j = 0; j < J; ++j)
        for (int i = 1; i < J; ++i)
          add(f.xi(i, j), wi, src.spatial(grid.edge(i), grid.center(j)));
      for (int j = 1; j < J; ++j)
        for (int i = 0; i < J; ++i)
          add(f.zeta(i, j), wi, src.spatial(grid.center(i), grid.edge(j)));
      break;
    case SourceTarget::xi:
      for (int j = 0; j < J; ++j)
        for (int i = 1; i < J; ++i)
          add(f.xi(i, j), wi, src.spatial(grid.edge(i), grid.center(j)));
      break;
    case SourceTarget::zeta:
      for (int j = 1; j < J; ++j)
        for (int i = 0; i < J; ++i)
          add(f.zeta(i, j), wi, src.spatial(grid.center(i), grid.edge(j)));
      break;
  }
}

}  // namespace haway
