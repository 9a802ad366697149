#include "haway/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace haway {

Mat4 principal_symbol(double kx, double ky, double c0) {
  if (kx == 0.0 && ky == 0.0)
    throw std::domain_error("symbol: zero wavevector");
  const Complex i(0.0, 1.0);
  const double c2 = c0 * c0;
  Mat4 m{};
  m[0][2] = i * kx * c2;
  m[1][3] = i * ky * c2;
  m[2][0] = i * kx;
  m[2][1] = i * kx;
  m[3][0] = i * ky;
  m[3][1] = i * ky;
  return m;
}

Vec4 mat_vec(const Mat4& m, const Vec4& v) {
  Vec4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += m[r][c] * v[c];
  return out;
}

namespace {

Vec4 normalized(Vec4 v) {
  double norm2 = 0.0;
  for (const Complex& c : v) norm2 += std::norm(c);
  const double n = std::sqrt(norm2);
  for (Complex& c : v) c /= n;
  return v;
}

}  // namespace

SymbolDecomposition symbol_eigen(double kx, double ky, double c0) {
  if (kx == 0.0 && ky == 0.0)
    throw std::domain_error("symbol: zero wavevector");
  const double k = std::hypot(kx, ky);
  const Complex i(0.0, 1.0);
  SymbolDecomposition d;
  d.eigenvalues = {Complex(0.0), Complex(0.0), i * c0 * k, -i * c0 * k};
  // lambda = 0: the one-dimensional eigenspace of the double eigenvalue.
  d.eigenvectors[0] = normalized({Complex(-1.0), Complex(1.0), 0.0, 0.0});
  // lambda = +-i c0 |k|: Table-1 vectors rescaled by kx so they stay finite
  // for kx -> 0.
  d.eigenvectors[1] = normalized(
      {Complex(kx * kx * c0 / k), Complex(ky * ky * c0 / k), Complex(kx),
       Complex(ky)});
  d.eigenvectors[2] = normalized(
      {Complex(-kx * kx * c0 / k), Complex(-ky * ky * c0 / k), Complex(kx),
       Complex(ky)});
  d.kernel_m2[0] = {Complex(1.0), Complex(-1.0), 0.0, 0.0};
  d.kernel_m2[1] = {0.0, 0.0, Complex(ky), Complex(-kx)};
  return d;
}

double damped_mode_ode(double sigma_star, double phi0, double t) {
  if (sigma_star < 0.0) throw std::domain_error("ode: sigma* must be >= 0");
  return phi0 * std::exp(-sigma_star * t);
}

ReflectionResult reflection_coefficient(const PlaneWaveContext& ctx,
                                        double ky_i, double ky_t) {
  const Complex i(0.0, 1.0);
  const Complex den1 = i * ctx.omega + ctx.sigma1;
  const Complex den2 = i * ctx.omega + ctx.sigma2;
  if (ctx.omega == 0.0 || den1 == Complex(0.0) || den2 == Complex(0.0))
    throw std::domain_error("reflection: degenerate denominator");
  const Complex a = i * ky_t / den2;  // transmitted-side impedance factor
  const Complex b = i * ky_i / den1;  // incident-side impedance factor
  if (a + b == Complex(0.0))
    throw std::domain_error("reflection: a + b vanishes");
  ReflectionResult r;
  r.R = (b - a) / (a + b);
  r.T = 1.0 + r.R;
  return r;
}

Field2D vorticity(const StaggeredGrid& grid, const FieldSet& f,
                  const FlowState& flow) {
  const int J = grid.J;
  const double c2 = flow.c0 * flow.c0;
  const double inv_rho = 1.0 / flow.rho0;
  Field2D w(J + 1, J + 1);
  // rho at an impulse station: mean of the two adjacent cell centers.
  for (int j = 1; j < J; ++j)
    for (int i = 1; i < J; ++i) {
      const double rho_xi_t = 0.5 * (f.pressure(i - 1, j) + f.pressure(i, j)) / c2;
      const double rho_xi_b =
          0.5 * (f.pressure(i - 1, j - 1) + f.pressure(i, j - 1)) / c2;
      const double u_t = (f.xi(i, j) - rho_xi_t * flow.u0) * inv_rho;
      const double u_b = (f.xi(i, j - 1) - rho_xi_b * flow.u0) * inv_rho;
      const double rho_ze_r = 0.5 * (f.pressure(i, j - 1) + f.pressure(i, j)) / c2;
      const double rho_ze_l =
          0.5 * (f.pressure(i - 1, j - 1) + f.pressure(i - 1, j)) / c2;
      const double v_r = (f.zeta(i, j) - rho_ze_r * flow.v0) * inv_rho;
      const double v_l = (f.zeta(i - 1, j) - rho_ze_l * flow.v0) * inv_rho;
      w(i, j) = (u_t - u_b) / grid.dy - (v_r - v_l) / grid.dx;
    }
  return w;
}

}  // namespace haway
