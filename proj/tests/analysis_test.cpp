#include "haway/analysis.hpp"

#include <gtest/gtest.h>

#include "haway/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

using namespace haway;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 gen(424242);
  return gen;
}

double residual_inf(const Mat4& m, const Vec4& v, const Complex& lambda) {
  const Vec4 mv = mat_vec(m, v);
  double r = 0.0;
  for (int k = 0; k < 4; ++k) r = std::max(r, std::abs(mv[k] - lambda * v[k]));
  return r;
}

Vec4 apply_twice(const Mat4& m, const Vec4& v) {
  return mat_vec(m, mat_vec(m, v));
}

}  // namespace

TEST(Symbol, MatrixEntries) {
  const Mat4 m = principal_symbol(1.0, 0.0, 1.0);
  const Complex i(0.0, 1.0);
  EXPECT_EQ(m[0][2], i);
  EXPECT_EQ(m[0][0], Complex(0.0));
  EXPECT_EQ(m[1][3], Complex(0.0));  // ky = 0
  EXPECT_EQ(m[2][0], i);
  EXPECT_EQ(m[2][1], i);
  EXPECT_EQ(m[3][0], Complex(0.0));
  EXPECT_THROW(principal_symbol(0.0, 0.0, 1.0), std::domain_error);
}

TEST(Symbol, LinearInWavevector) {
  std::uniform_real_distribution<double> k(-2.0, 2.0);
  for (int rep = 0; rep < 20; ++rep) {
    const double kx = k(rng()), ky = k(rng());
    if (kx == 0.0 && ky == 0.0) continue;
    const Mat4 m1 = principal_symbol(kx, ky, 1.4);
    const Mat4 m2 = principal_symbol(2.0 * kx, 2.0 * ky, 1.4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        EXPECT_NEAR(std::abs(m2[r][c] - 2.0 * m1[r][c]), 0.0, 1e-15);
  }
}

TEST(Symbol, ZeroModeAnnihilatedForAllWavevectors) {
  std::uniform_real_distribution<double> k(-3.0, 3.0);
  const Vec4 v{Complex(-1.0), Complex(1.0), 0.0, 0.0};
  for (int rep = 0; rep < 50; ++rep) {
    const double kx = k(rng()), ky = k(rng());
    if (kx == 0.0 && ky == 0.0) continue;
    const Mat4 m = principal_symbol(kx, ky, 2.0);
    EXPECT_NEAR(residual_inf(m, v, Complex(0.0)), 0.0, 1e-14);
  }
}

TEST(Symbol, EigenvaluesAtUnitWavevector) {
  const SymbolDecomposition d = symbol_eigen(1.0, 0.0, 1.0);
  EXPECT_EQ(d.eigenvalues[0], Complex(0.0));
  EXPECT_EQ(d.eigenvalues[1], Complex(0.0));
  EXPECT_NEAR(std::abs(d.eigenvalues[2] - Complex(0.0, 1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d.eigenvalues[3] - Complex(0.0, -1.0)), 0.0, 1e-15);
}

TEST(Symbol, EigenpairResidualsBelow1em12) {
  std::uniform_real_distribution<double> k(-2.0, 2.0);
  std::uniform_real_distribution<double> c(0.5, 2.0);
  for (int rep = 0; rep < 100; ++rep) {
    const double kx = k(rng()), ky = k(rng()), c0 = c(rng());
    if (std::hypot(kx, ky) < 1e-3) continue;
    const Mat4 m = principal_symbol(kx, ky, c0);
    const SymbolDecomposition d = symbol_eigen(kx, ky, c0);
    EXPECT_LT(residual_inf(m, d.eigenvectors[0], Complex(0.0)), 1e-12);
    EXPECT_LT(residual_inf(m, d.eigenvectors[1], d.eigenvalues[2]), 1e-12);
    EXPECT_LT(residual_inf(m, d.eigenvectors[2], d.eigenvalues[3]), 1e-12);
  }
}

TEST(Symbol, KernelM2StructureAndDefectiveness) {
  std::uniform_real_distribution<double> k(-2.0, 2.0);
  for (int rep = 0; rep < 50; ++rep) {
    const double kx = k(rng()), ky = k(rng());
    if (std::hypot(kx, ky) < 1e-3) continue;
    const Mat4 m = principal_symbol(kx, ky, 1.3);
    const SymbolDecomposition d = symbol_eigen(kx, ky, 1.3);
    // Both basis vectors are annihilated by M^2.
    for (const Vec4& v : d.kernel_m2) {
      const Vec4 mmv = apply_twice(m, v);
      for (const Complex& entry : mmv) EXPECT_LT(std::abs(entry), 1e-12);
    }
    // V_M2 = (0,0,ky,-kx) is not an eigenvector of M: M V != 0.
    const Vec4 mv = mat_vec(m, d.kernel_m2[1]);
    double norm = 0.0;
    for (const Complex& entry : mv) norm += std::norm(entry);
    EXPECT_GT(std::sqrt(norm), 1e-3);
  }
}

// Cross-check the closed-form eigenstructure against a generic complex
// eigensolver.
TEST(Symbol, MatchesGenericEigensolver) {
  std::uniform_real_distribution<double> k(-2.0, 2.0);
  std::uniform_real_distribution<double> c(0.5, 2.0);
  for (int rep = 0; rep < 25; ++rep) {
    const double kx = k(rng()), ky = k(rng()), c0 = c(rng());
    if (std::hypot(kx, ky) < 1e-3) continue;
    const Mat4 m = principal_symbol(kx, ky, c0);
    Eigen::Matrix4cd em;
    for (int r = 0; r < 4; ++r)
      for (int cc = 0; cc < 4; ++cc) em(r, cc) = m[r][cc];
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(em);
    ASSERT_EQ(solver.info(), Eigen::Success);
    std::array<double, 4> got, want;
    for (int v = 0; v < 4; ++v) got[v] = solver.eigenvalues()[v].imag();
    const SymbolDecomposition d = symbol_eigen(kx, ky, c0);
    for (int v = 0; v < 4; ++v) want[v] = d.eigenvalues[v].imag();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    for (int v = 0; v < 4; ++v) EXPECT_NEAR(got[v], want[v], 1e-10);
  }
}

TEST(DampedMode, ClosedForm) {
  EXPECT_DOUBLE_EQ(damped_mode_ode(0.0, 2.5, 7.0), 2.5);
  EXPECT_NEAR(damped_mode_ode(1.0, 1.0, 1.0), 0.367879441171442322, 1e-15);
  // monotone nonincreasing in t for sigma >= 0
  double prev = damped_mode_ode(0.7, 1.0, 0.0);
  for (double t = 0.1; t < 3.0; t += 0.1) {
    const double cur = damped_mode_ode(0.7, 1.0, t);
    EXPECT_LE(cur, prev + 1e-15);
    prev = cur;
  }
  EXPECT_THROW(damped_mode_ode(-1.0, 1.0, 1.0), std::domain_error);
}

TEST(Toy1d, ZeroForcingStaysZero) {
  const ToySeries s = toy_1d_model(1.0, 2.0, [](double) { return 0.0; }, 10.0,
                                   0.01);
  for (double v : s.u) EXPECT_EQ(v, 0.0);
  for (double v : s.v) EXPECT_EQ(v, 0.0);
}

TEST(Toy1d, ConstantForcingSteadyState) {
  // psi = 1, sigma2 = 2: v(t) -> 1/2 (damped integrator steady state).
  const ToySeries s = toy_1d_model(1.0, 2.0, [](double) { return 1.0; }, 20.0,
                                   0.01);
  EXPECT_NEAR(s.v.back(), 0.5, 1e-4);
  // u settles at -v_ss/sigma1
  EXPECT_NEAR(s.u.back(), -0.5, 1e-4);
}

TEST(Toy1d, DecayingForcingConvolutionAndDecay) {
  // psi = e^{-t}, sigma1 = sigma2 = 1: v(t) = t e^{-t} exactly; u -> 0.
  const double dt = 0.005;
  const ToySeries s =
      toy_1d_model(1.0, 1.0, [](double t) { return std::exp(-t); }, 40.0, dt);
  for (std::size_t k = 0; k < s.times.size(); k += 100) {
    const double t = s.times[k];
    EXPECT_NEAR(s.v[k], t * std::exp(-t), 1e-4);
  }
  EXPECT_LT(std::fabs(s.u.back()), 1e-8);
  EXPECT_LT(std::fabs(s.v.back()), 1e-8);
}

TEST(Toy1d, BoundednessForBoundedForcings) {
  // Prop-10 style conclusion: bounded psi keeps both amplitudes bounded, and
  // decaying psi sends u to zero by t = 40/min(sigma).
  const double s1 = 0.8, s2 = 1.6;
  const double t_end = 40.0 / std::min(s1, s2);
  const double dt = 0.05 / std::max(s1, s2);
  const auto check_bounded = [&](auto&& psi) {
    const ToySeries s = toy_1d_model(s1, s2, psi, t_end, dt);
    double mu = 0.0, mv = 0.0;
    for (double v : s.u) mu = std::max(mu, std::fabs(v));
    for (double v : s.v) mv = std::max(mv, std::fabs(v));
    EXPECT_TRUE(std::isfinite(mu));
    EXPECT_TRUE(std::isfinite(mv));
    EXPECT_LT(mu, 10.0);
    EXPECT_LT(mv, 10.0);
    return s;
  };
  check_bounded([](double) { return 1.0; });
  check_bounded([](double t) { return std::sin(3.0 * t); });
  const ToySeries dec = check_bounded([](double t) { return std::exp(-t); });
  EXPECT_LT(std::fabs(dec.u.back()), 1e-8);
}

TEST(Toy1d, RejectsBadParameters) {
  const auto one = [](double) { return 1.0; };
  EXPECT_THROW(toy_1d_model(0.0, 1.0, one, 1.0, 0.01), std::domain_error);
  EXPECT_THROW(toy_1d_model(1.0, -2.0, one, 1.0, 0.01), std::domain_error);
  EXPECT_THROW(toy_1d_model(1.0, 4.0, one, 1.0, 0.1), std::domain_error);
}

TEST(Reflection, MatchedInterfaceHasZeroReflection) {
  PlaneWaveContext ctx;
  ctx.omega = 1.7;
  ctx.sigma1 = 0.6;
  ctx.sigma2 = 0.6;
  const ReflectionResult r = reflection_coefficient(ctx, 0.9, 0.9);
  EXPECT_LT(std::abs(r.R), 1e-14);
  EXPECT_NEAR(std::abs(r.T - Complex(1.0)), 0.0, 1e-14);
}

TEST(Reflection, LargeSigma2Limit) {
  // sigma2 -> infinity at fixed omega: the transmitted-side factor dies and
  // the solved formula tends to R = +1 (the zeta-continuity hard limit).
  PlaneWaveContext ctx;
  ctx.omega = 1.0;
  ctx.sigma1 = 0.0;
  ctx.sigma2 = 1e9;
  const ReflectionResult r = reflection_coefficient(ctx, 1.0, 1.0);
  EXPECT_NEAR(r.R.real(), 1.0, 1e-6);
  EXPECT_NEAR(r.R.imag(), 0.0, 1e-6);
}

TEST(Reflection, MatchesIndependentComplexSolve) {
  // Brute force: solve the 2x2 real system for (Re R, Im R) obtained from
  // a (1 + R) = b (1 - R) by splitting real and imaginary parts.
  std::uniform_real_distribution<double> om(0.2, 3.0);
  std::uniform_real_distribution<double> sig(0.0, 4.0);
  std::uniform_real_distribution<double> ang(0.05, 1.5);
  for (int rep = 0; rep < 100; ++rep) {
    PlaneWaveContext ctx;
    ctx.omega = om(rng());
    ctx.sigma1 = sig(rng());
    ctx.sigma2 = sig(rng());
    const double theta = ang(rng());
    const double ky = ctx.omega * std::cos(theta);
    const Complex i(0.0, 1.0);
    const Complex a = i * ky / (i * ctx.omega + ctx.sigma2);
    const Complex b = i * ky / (i * ctx.omega + ctx.sigma1);
    // (a + b) R = b - a, as a real 2x2 system
    const double m11 = (a + b).real(), m12 = -(a + b).imag();
    const double m21 = (a + b).imag(), m22 = (a + b).real();
    const double r1 = (b - a).real(), r2 = (b - a).imag();
    const double det = m11 * m22 - m12 * m21;
    ASSERT_NE(det, 0.0);
    const Complex r_ref((m22 * r1 - m12 * r2) / det,
                        (m11 * r2 - m21 * r1) / det);
    const ReflectionResult r = reflection_coefficient(ctx, ky, ky);
    EXPECT_LT(std::abs(r.R - r_ref), 1e-12);
  }
}

TEST(Reflection, DegenerateInputsRejected) {
  PlaneWaveContext ctx;
  ctx.omega = 0.0;
  ctx.sigma1 = 1.0;
  ctx.sigma2 = 1.0;
  EXPECT_THROW(reflection_coefficient(ctx, 1.0, 1.0), std::domain_error);
}

TEST(Vorticity, ConstantImpulsesGiveZero) {
  const StaggeredGrid g = new_grid(10, 10.0, 0, 0);
  FieldSet f = zero_fields(g);
  f.xi.fill(0.7);
  f.zeta.fill(-0.3);
  const Field2D w = vorticity(g, f, FlowState{});
  EXPECT_EQ(w.max_abs(), 0.0);
}

TEST(Vorticity, LinearShearGivesConstantCurl) {
  // xi = s*y, zeta = 0, p = 0: omega = s/rho0 at interior corners.
  const StaggeredGrid g = new_grid(10, 10.0, 0, 0);
  FieldSet f = zero_fields(g);
  const double s = 0.4;
  for (int j = 0; j < 10; ++j)
    for (int i = 0; i <= 10; ++i) f.xi(i, j) = s * g.center(j);
  FlowState flow;
  flow.rho0 = 2.0;
  const Field2D w = vorticity(g, f, flow);
  for (int j = 1; j < 10; ++j)
    for (int i = 1; i < 10; ++i) EXPECT_NEAR(w(i, j), s / 2.0, 1e-14);
}

TEST(Vorticity, PressurePulseStaysIrrotationalWithoutFlow) {
  // Pure pressure pulse, no flow: the staggered curl of the staggered
  // gradient telescopes, so omega stays at rounding level.
  const StaggeredGrid g = new_grid(40, 40.0, 0, 0);
  FieldSet f = zero_fields(g);
  for (int j = 0; j < 40; ++j)
    for (int i = 0; i < 40; ++i) {
      const double x = g.center(i) - 20.0, y = g.center(j) - 20.0;
      f.p_x(i, j) = std::exp(-(x * x + y * y) / 9.0);
    }
  const SchemeParams params = make_params(g, 1.0, 0.95);
  for (int k = 0; k < 100; ++k) step_free(g, f, params);
  const Field2D w = vorticity(g, f, FlowState{});
  EXPECT_LT(w.max_abs(), 1e-12);
}
