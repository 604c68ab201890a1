#include <gtest/gtest.h>

#include <cmath>

#include "dualnum/mechanism.hpp"
#include "dualnum/root_find.hpp"
#include "test_support.hpp"

namespace dualnum {
namespace {

Dual3d example1(const Dual3d& u, const Dual3d& x) {
  return cos(u * x) - pow(u, 3.0) + x + sin(u * u * x);
}

Dual3d identity_eq(const Dual3d& u, const Dual3d& x) { return u - x; }
Dual3d cube_root_eq(const Dual3d& u, const Dual3d& x) { return u * u * u - x; }
Dual3d sine_eq(const Dual3d& u, const Dual3d& x) { return u - sin(x); }

// u^3 + u x - e^x = 0; F_u = 3u^2 + x > 0 for x > 0.
Dual3d mixed_eq(const Dual3d& u, const Dual3d& x) { return u * u * u + u * x - exp(x); }

RootConfig newton(double u0) {
  RootConfig cfg;
  cfg.u0 = u0;
  return cfg;
}

RootConfig halley(double u0) {
  RootConfig cfg = newton(u0);
  cfg.method = RootMethod::halley;
  return cfg;
}

void expect_dual_near(const Dual3d& a, const Dual3d& b, double tol) {
  EXPECT_NEAR(a.value(), b.value(), tol);
  EXPECT_NEAR(a.first(), b.first(), tol);
  EXPECT_NEAR(a.second(), b.second(), tol);
}

TEST(NrDual, ImplicitFunctionExample) {
  RootConfig cfg = newton(2.0);
  const Dual3d x = make_variable(0.7);
  expect_dual_near(nr_dual(cfg, example1, x), Dual3d(1.3085, 0.1163, -0.9337), 1e-4);
  expect_dual_near(nr_dual(cfg, example1, sin(x) + x * x),
                   Dual3d(1.2963, -0.2556, -1.1425), 1e-4);
}

TEST(NrDual, FixedIterationCountMatchesToleranceExit) {
  RootConfig fixed = newton(2.0);
  fixed.tol = 0.0;
  const Dual3d x = make_variable(0.7);
  expect_dual_near(nr_dual(fixed, example1, x), nr_dual(newton(2.0), example1, x), 1e-12);
}

TEST(NrDual, FrozenSlopeLoopReachesSameFixedPoint) {
  RootConfig cfg = newton(2.0);
  cfg.frozen_slope = true;
  cfg.tol = 0.0;
  const Dual3d x = make_variable(0.7);
  expect_dual_near(nr_dual(cfg, example1, x), Dual3d(1.3085, 0.1163, -0.9337), 1e-4);
}

TEST(NrDual, IdentityEquation) {
  for (double x0 : {-2.0, 0.0, 3.5}) {
    for (double u0 : {-10.0, 0.0, 7.0}) {
      expect_dual_near(nr_dual(newton(u0), identity_eq, make_variable(x0)), Dual3d(x0, 1, 0),
                       1e-14);
    }
  }
}

TEST(HalleyDual, Examples) {
  const Dual3d x = make_variable(0.7);
  expect_dual_near(halley_dual(halley(2.0), example1, x), nr_dual(newton(2.0), example1, x),
                   1e-9);

  RootConfig one_step = halley(5.0);
  one_step.max_iters = 1;
  expect_dual_near(halley_dual(one_step, identity_eq, make_variable(1.25)), Dual3d(1.25, 1, 0),
                   1e-15);

  expect_dual_near(halley_dual(halley(1.5), cube_root_eq, make_variable(8.0)),
                   Dual3d(2.0, 1.0 / 12.0, -1.0 / 144.0), 1e-12);
}

TEST(RootFind, SettlePassesGiveImplicitDerivatives) {
  for (double x0 : {0.3, 0.9, 1.7, 2.5}) {
    const Dual3d u = nr_dual(newton(1.0), mixed_eq, make_variable(x0));
    const double r = u.value();
    const double fu = 3 * r * r + x0;
    const double fx = r - std::exp(x0);
    const double fuu = 6 * r;
    const double fux = 1.0;
    const double fxx = -std::exp(x0);
    const double u1 = -fx / fu;
    const double u2 = -(fuu * u1 * u1 + 2 * fux * u1 + fxx) / fu;
    EXPECT_NEAR(u.first(), u1, 1e-9);
    EXPECT_NEAR(u.second(), u2, 1e-9);
  }
}

TEST(RootFind, ClosedFormSolutions) {
  for (double x0 = 0.5; x0 <= 20.0; x0 += 0.75) {
    const Dual3d x = make_variable(x0);
    const Dual3d expected = pow(x, 1.0 / 3.0);
    expect_dual_near(nr_dual(newton(1.0), cube_root_eq, x), expected, 1e-9);
    expect_dual_near(halley_dual(halley(1.0), cube_root_eq, x), expected, 1e-9);
  }
  for (double x0 = -3.0; x0 <= 3.0; x0 += 0.25) {
    const Dual3d x = make_variable(x0);
    expect_dual_near(nr_dual(newton(0.0), sine_eq, x), sin(x), 1e-9);
  }
}

TEST(RootFind, MethodsAgreeOnRegisteredExamples) {
  const MechanismParams params = MechanismParams::reference();
  const DualBivariate mech = [&params](const Dual3d& phi, const Dual3d& th) {
    return loop_closure(params, phi, th);
  };
  struct Case {
    DualBivariate F;
    double u0;
    Dual3d g;
  };
  const Case cases[] = {
      {example1, 2.0, make_variable(0.7)},
      {example1, 2.0, sin(make_variable(0.7)) + make_variable(0.7) * make_variable(0.7)},
      {cube_root_eq, 1.0, make_variable(8.0)},
      {mixed_eq, 1.0, make_variable(1.1)},
      {mech, kMechanismPhiGuess, make_variable(2.0)},
  };
  for (const auto& c : cases) {
    expect_dual_near(nr_dual(newton(c.u0), c.F, c.g), halley_dual(halley(c.u0), c.F, c.g), 1e-9);
  }
}

TEST(RootFind, ConstantSeedGivesConstantRoot) {
  const Dual3d u = nr_dual(newton(2.0), example1, make_constant(0.7));
  EXPECT_EQ(u.first(), 0.0);
  EXPECT_EQ(u.second(), 0.0);
}

TEST(RootFind, ResidualsMapConstantsToConstants) {
  const MechanismParams params = MechanismParams::reference();
  const Dual3d u = make_constant(1.1);
  const Dual3d x = make_constant(0.6);
  for (const Dual3d& r : {example1(u, x), cube_root_eq(u, x), mixed_eq(u, x), sine_eq(u, x),
                          loop_closure(params, u, x)}) {
    EXPECT_TRUE(r.is_constant());
  }
}

TEST(RootFind, SingularDerivative) {
  // F = u^2 - x has F_u = 0 at u0 = 0.
  const DualBivariate F = [](const Dual3d& u, const Dual3d& x) { return u * u - x; };
  EXPECT_THROW(nr_dual(newton(0.0), F, make_variable(2.0)), SingularDerivativeError);
  EXPECT_THROW(halley_dual(halley(0.0), F, make_variable(2.0)), SingularDerivativeError);
}

TEST(RootFind, DivergenceCarriesIterationCount) {
  // The root sits at -1e400, so the first Newton step overflows.
  const DualBivariate F = [](const Dual3d& u, const Dual3d&) { return 1e-200 * u + 1e200; };
  try {
    (void)nr_dual(newton(0.0), F, make_variable(0.0));
    FAIL() << "expected DivergenceError";
  } catch (const DivergenceError& e) {
    EXPECT_GT(e.iterations(), 0U);
    EXPECT_LE(e.iterations(), 100U);
  }
}

TEST(RootFind, NonConvergenceCarriesResidual) {
  // u^2 + 1 has no real root; Newton wanders without blowing up.
  const DualBivariate F = [](const Dual3d& u, const Dual3d&) { return u * u + 1.0; };
  RootConfig cfg = newton(0.5);
  cfg.max_iters = 40;
  try {
    (void)nr_dual(cfg, F, make_variable(0.0));
    FAIL() << "expected NonConvergenceError";
  } catch (const NonConvergenceError& e) {
    EXPECT_GE(e.residual(), 1.0);
  }
}

TEST(RootFind, ConfigValidation) {
  RootConfig cfg = newton(1.0);
  cfg.max_iters = 0;
  EXPECT_THROW(nr_dual(cfg, identity_eq, make_variable(1.0)), ValidationError);
  cfg = newton(1.0);
  cfg.tol = -1.0;
  EXPECT_THROW(nr_dual(cfg, identity_eq, make_variable(1.0)), ValidationError);
  cfg = halley(1.0);
  cfg.frozen_slope = true;
  EXPECT_THROW(halley_dual(cfg, identity_eq, make_variable(1.0)), ValidationError);
  EXPECT_THROW(nr_dual(newton(1.0), DualBivariate{}, make_variable(1.0)), ValidationError);
}

TEST(Mechanism, CosinesOnPositiveBranch) {
  const MechanismParams p = MechanismParams::reference();
  EXPECT_NEAR(p.s1 * p.s1 + p.c1() * p.c1(), 1.0, 1e-12);
  EXPECT_NEAR(p.s2 * p.s2 + p.c2() * p.c2(), 1.0, 1e-12);
  EXPECT_GT(p.c1(), 0.0);
  EXPECT_GT(p.c2(), 0.0);
}

TEST(Mechanism, ReproducesPublishedDerivatives) {
  const MechanismParams p = MechanismParams::reference();
  const RootConfig cfg = newton(kMechanismPhiGuess);
  const Dual3d x = make_variable(2.0);
  auto f = [](const Dual3d& v) { return 2.0 * (sin(v) * sin(v)); };

  const Dual3d phi = mechanism_phi(p, x, cfg);
  expect_dual_near(f(phi), Dual3d(1.4279, -1.7693, -1.2856), 1e-4);
  expect_dual_near(mechanism_phi(p, f(x), cfg), Dual3d(1.7817, -1.6171, -3.5137), 1e-4);

  const double residual =
      loop_closure(p, make_constant(phi.value()), make_constant(2.0)).value();
  EXPECT_LE(std::abs(residual), 1e-9);
}

}  // namespace
}  // namespace dualnum
