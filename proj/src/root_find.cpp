#include "dualnum/root_find.hpp"

#include <cmath>
#include <string>

namespace dualnum {
namespace {

void validate(const RootConfig& cfg, const DualBivariate& F) {
  if (cfg.max_iters < 1) throw ValidationError("max_iters must be >= 1");
  if (!(cfg.tol >= 0.0)) throw ValidationError("tol must be >= 0");
  if (!std::isfinite(cfg.u0)) throw ValidationError("initial guess must be finite");
  if (!F) throw ValidationError("empty residual function");
}

// {F, F_u, F_uu} at (u, x) with x held constant.
Dual3d residual_in_u(const DualBivariate& F, double u, double x) {
  return F(Dual3d::variable(u), Dual3d::constant(x));
}

void require_finite_iterate(double u, std::size_t iteration) {
  if (!std::isfinite(u)) {
    throw DivergenceError("root iteration diverged after " + std::to_string(iteration) +
                              " iterates",
                          iteration);
  }
}

// Two fixed-slope dual passes at a converged root.
Dual3d settle(const DualBivariate& F, double root, double x, const Dual3d& g) {
  const double slope = residual_in_u(F, root, x).first();
  if (slope == 0.0) {
    throw SingularDerivativeError("dF/du vanishes at the root u = " +
                                  detail::describe(root));
  }
  const Dual3d slope_d = Dual3d::constant(slope);
  Dual3d u = Dual3d::constant(root);
  for (int pass = 0; pass < 2; ++pass) u = u - F(u, g) / slope_d;
  if (!u.is_finite()) throw DivergenceError("settle passes produced a non-finite value", 0);
  return u;
}

void check_converged(const RootConfig& cfg, const DualBivariate& F, double u, double x) {
  if (cfg.tol == 0.0) return;
  const double r = residual_in_u(F, u, x).value();
  if (!(std::abs(r) <= cfg.tol)) {
    throw NonConvergenceError("no convergence after " + std::to_string(cfg.max_iters) +
                                  " iterations, |F| = " + detail::describe(std::abs(r)),
                              std::abs(r));
  }
}

// Fixed-slope loop: the dual iterate itself is updated max_iters times.
Dual3d frozen_newton(const RootConfig& cfg, const DualBivariate& F, const Dual3d& g) {
  const double x = g.value();
  const double slope = residual_in_u(F, cfg.u0, x).first();
  if (slope == 0.0) {
    throw SingularDerivativeError("dF/du vanishes at the initial guess u0 = " +
                                  detail::describe(cfg.u0));
  }
  const Dual3d slope_d = Dual3d::constant(slope);
  Dual3d u = Dual3d::constant(cfg.u0);
  for (int k = 0; k < cfg.max_iters; ++k) {
    u = u - F(u, g) / slope_d;
    require_finite_iterate(u.value(), static_cast<std::size_t>(k) + 1);
  }
  check_converged(cfg, F, u.value(), x);
  return u;
}

}  // namespace

Dual3d nr_dual(const RootConfig& cfg, const DualBivariate& F, const Dual3d& g) {
  validate(cfg, F);
  detail::require_no_nan(g, "nr_dual");
  if (cfg.frozen_slope) return frozen_newton(cfg, F, g);

  const double x = g.value();
  double u = cfg.u0;
  for (int k = 0; k < cfg.max_iters; ++k) {
    const Dual3d r = residual_in_u(F, u, x);
    if (cfg.tol > 0.0 && std::abs(r.value()) <= cfg.tol) break;
    if (r.first() == 0.0) {
      throw SingularDerivativeError("dF/du vanishes at iterate u = " + detail::describe(u));
    }
    u -= r.value() / r.first();
    require_finite_iterate(u, static_cast<std::size_t>(k) + 1);
  }
  check_converged(cfg, F, u, x);
  return settle(F, u, x, g);
}

Dual3d halley_dual(const RootConfig& cfg, const DualBivariate& F, const Dual3d& g) {
  validate(cfg, F);
  detail::require_no_nan(g, "halley_dual");
  if (cfg.frozen_slope) {
    throw ValidationError("the frozen-slope loop is only defined for Newton's method");
  }

  const double x = g.value();
  double u = cfg.u0;
  for (int k = 0; k < cfg.max_iters; ++k) {
    const Dual3d r = residual_in_u(F, u, x);
    if (cfg.tol > 0.0 && std::abs(r.value()) <= cfg.tol) break;
    const double f = r.value();
    const double fu = r.first();
    const double fuu = r.second();
    if (fu == 0.0) {
      throw SingularDerivativeError("dF/du vanishes at iterate u = " + detail::describe(u));
    }
    const double denom = 2.0 * fu * fu - f * fuu;
    if (denom == 0.0) {
      throw SingularDerivativeError("Halley denominator vanishes at u = " +
                                    detail::describe(u));
    }
    u -= 2.0 * f * fu / denom;
    require_finite_iterate(u, static_cast<std::size_t>(k) + 1);
  }
  check_converged(cfg, F, u, x);
  return settle(F, u, x, g);
}

Dual3d solve_implicit(const RootConfig& cfg, const DualBivariate& F, const Dual3d& g) {
  return cfg.method == RootMethod::halley ? halley_dual(cfg, F, g) : nr_dual(cfg, F, g);
}

}  // namespace dualnum
