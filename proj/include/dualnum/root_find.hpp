#pragma once

#include <functional>

#include "dualnum/dual3.hpp"

namespace dualnum {

enum class RootMethod { newton, halley };

struct RootConfig {
  RootMethod method = RootMethod::newton;
  double u0 = 0.0;
  int max_iters = 100;
  /// Residual tolerance on |F|. Zero runs exactly max_iters iterations.
  double tol = 1e-12;
  /// Keep F_u fixed at the initial guess and iterate the dual value directly
  /// for max_iters passes (the fixed-slope loop). Newton only.
  bool frozen_slope = false;
};

/// F(u, x) over dual numbers. Must map constant inputs to a constant.
using DualBivariate = std::function<Dual3d(const Dual3d& u, const Dual3d& x)>;

/// Solves F(u, g0) = 0 for u and returns {u, du/ds, d2u/ds2}, where s is the
/// scalar seed carried by g.
///
/// The real part is found with Newton's method (F_u refreshed each iterate,
/// read from F({u,1,0}, {g0,0,0})). Once it has converged, two passes of
///   u <- u - F(u, g) / F_u
/// with F_u held at the root settle the dual parts: the first pass makes
/// du/ds exact, the second d2u/ds2.
Dual3d nr_dual(const RootConfig& cfg, const DualBivariate& F, const Dual3d& g);

/// As nr_dual, with Halley's update
///   u <- u - 2 F F_u / (2 F_u^2 - F F_uu)
/// for the real part.
Dual3d halley_dual(const RootConfig& cfg, const DualBivariate& F, const Dual3d& g);

/// Dispatches on cfg.method.
Dual3d solve_implicit(const RootConfig& cfg, const DualBivariate& F, const Dual3d& g);

}  // namespace dualnum
