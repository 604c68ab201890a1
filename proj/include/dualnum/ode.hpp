#pragma once

#include <functional>

#include "dualnum/dual3.hpp"

namespace dualnum {

/// Right-hand side u(t, x1, x2) of the first-order system.
using OdeRhs = std::function<double(double t, double x1, double x2)>;

/// f''(t) = F(t, f, f') as the system x1' = rhs1, x2' = rhs2 with x1 = f,
/// x2 = f'. Usually rhs1 returns x2 and rhs2 is F.
struct OdeProblem {
  double t0 = 0.0;
  double x10 = 0.0;
  double x20 = 0.0;
  OdeRhs rhs1;
  OdeRhs rhs2;
  /// Uniform steps between t0 and each query point.
  int steps = 100;
};

struct OdeState {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Classic fourth-order Runge-Kutta from t0 to t_end in problem.steps equal
/// steps. t_end < t0 integrates backward.
OdeState rk4(const OdeProblem& problem, double t_end);

/// {f, f', f''} at t.value(), composed with t so the derivatives are with
/// respect to t's seed. f'' comes from rhs2 at the final state.
Dual3d rk4dual(const OdeProblem& problem, const Dual3d& t);

/// f'' + 0.4 f' + 1.1 f + f^3 = 2.1 cos(1.8 t), f(0) = 0.3, f'(0) = -2.3,
/// 100 steps.
OdeProblem duffing_problem();

}  // namespace dualnum
