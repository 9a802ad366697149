#pragma once

#include <array>
#include <complex>
#include <vector>

#include "haway/flow.hpp"
#include "haway/grid.hpp"

namespace haway {

using Complex = std::complex<double>;
using Vec4 = std::array<Complex, 4>;
using Mat4 = std::array<std::array<Complex, 4>, 4>;

// Principal symbol M = i kx A + i ky B of the split-field layer system on
// the state (p_x, p_y, xi, zeta). Throws std::domain_error for a zero
// wavevector.
Mat4 principal_symbol(double kx, double ky, double c0);

Vec4 mat_vec(const Mat4& m, const Vec4& v);

// Closed-form eigenstructure: eigenvalue 0 with algebraic multiplicity two
// but a one-dimensional eigenspace, and the conjugate pair +-i c0 |k|
// (sqrt(-k^2) on the principal branch). kernel_m2 spans ker(M^2).
struct SymbolDecomposition {
  std::array<Complex, 4> eigenvalues;  // 0, 0, +i c0|k|, -i c0|k|
  std::array<Vec4, 3> eigenvectors;    // unit-norm: zero mode, +, -
  std::array<Vec4, 2> kernel_m2;       // (1,-1,0,0), (0,0,ky,-kx)
};

SymbolDecomposition symbol_eigen(double kx, double ky, double c0);

// phi(t) = phi0 exp(-sigma* t), the damped-direction amplitude.
double damped_mode_ode(double sigma_star, double phi0, double t);

// Amplitude factors of the 1-D non-hyperbolic layer model: the state is
// u = u(t) delta', v = v(t) delta with
//   dv/dt + sigma2 v = psi(t),   du/dt + sigma1 u = -v.
// Integrated with an explicit trapezoidal rule; requires strictly positive
// coefficients and dt <= 0.1/max(sigma1, sigma2).
struct ToySeries {
  std::vector<double> times, u, v;
};

template <typename Psi>
ToySeries toy_1d_model(double sigma1, double sigma2, Psi&& psi, double t_end,
                       double dt);

// Interface-side data of the plane-wave matching problem.
struct PlaneWaveContext {
  double omega = 0.0;
  double sigma1 = 0.0, sigma2 = 0.0;
};

struct ReflectionResult {
  Complex R, T;
};

// Solves (i ky_t / (i w + sigma2)) (1 + R) = (i ky_i / (i w + sigma1)) (1 - R)
// for R, with T = 1 + R. Throws std::domain_error for degenerate
// denominators.
ReflectionResult reflection_coefficient(const PlaneWaveContext& ctx,
                                        double ky_i, double ky_t);

// Centered-difference curl of the acoustic velocity at interior grid
// corners: omega = du/dy - dv/dx with u = (xi - rho u0)/rho0,
// v = (zeta - rho v0)/rho0, rho = p/c0^2. Boundary corners hold zero.
Field2D vorticity(const StaggeredGrid& grid, const FieldSet& fields,
                  const FlowState& flow);

// --- implementation ---

template <typename Psi>
ToySeries toy_1d_model(double sigma1, double sigma2, Psi&& psi, double t_end,
                       double dt) {
  if (!(sigma1 > 0.0) || !(sigma2 > 0.0))
    throw std::domain_error("toy1d: sigma1, sigma2 must be strictly positive");
  const double s = std::max(sigma1, sigma2);
  if (!(dt > 0.0) || dt > 0.1 / s)
    throw std::domain_error("toy1d: need 0 < dt <= 0.1/max(sigma)");
  ToySeries out;
  double u = 0.0, v = 0.0, t = 0.0;
  out.times.push_back(t);
  out.u.push_back(u);
  out.v.push_back(v);
  const long n = static_cast<long>(t_end / dt + 0.5);
  for (long k = 0; k < n; ++k) {
    const double fv0 = -sigma2 * v + psi(t);
    const double fu0 = -sigma1 * u - v;
    const double vp = v + dt * fv0;
    const double up = u + dt * fu0;
    const double fv1 = -sigma2 * vp + psi(t + dt);
    const double fu1 = -sigma1 * up - vp;
    v += 0.5 * dt * (fv0 + fv1);
    u += 0.5 * dt * (fu0 + fu1);
    t = (k + 1) * dt;
    out.times.push_back(t);
    out.u.push_back(u);
    out.v.push_back(v);
  }
  return out;
}

}  // namespace haway
