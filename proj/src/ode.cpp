#include "dualnum/ode.hpp"

#include <cmath>
#include <string>

namespace dualnum {
namespace {

void validate(const OdeProblem& problem) {
  if (problem.steps < 1) throw ValidationError("step count must be >= 1");
  if (!problem.rhs1 || !problem.rhs2) throw ValidationError("ODE right-hand side is empty");
  if (!std::isfinite(problem.t0) || !std::isfinite(problem.x10) ||
      !std::isfinite(problem.x20)) {
    throw ValidationError("ODE initial conditions must be finite");
  }
}

void require_finite(double x1, double x2, int step) {
  if (!std::isfinite(x1) || !std::isfinite(x2)) {
    throw BlowUpError("RK4 state became non-finite at step " + std::to_string(step), step);
  }
}

}  // namespace

OdeState rk4(const OdeProblem& problem, double t_end) {
  validate(problem);
  if (!std::isfinite(t_end)) throw ValidationError("RK4 end point must be finite");

  const double h = (t_end - problem.t0) / problem.steps;
  const double half = 0.5 * h;
  double x1 = problem.x10;
  double x2 = problem.x20;
  const auto& u1 = problem.rhs1;
  const auto& u2 = problem.rhs2;

  for (int step = 0; step < problem.steps; ++step) {
    const double t = problem.t0 + step * h;

    const double k1a = u1(t, x1, x2);
    const double k1b = u2(t, x1, x2);
    const double k2a = u1(t + half, x1 + half * k1a, x2 + half * k1b);
    const double k2b = u2(t + half, x1 + half * k1a, x2 + half * k1b);
    const double k3a = u1(t + half, x1 + half * k2a, x2 + half * k2b);
    const double k3b = u2(t + half, x1 + half * k2a, x2 + half * k2b);
    const double k4a = u1(t + h, x1 + h * k3a, x2 + h * k3b);
    const double k4b = u2(t + h, x1 + h * k3a, x2 + h * k3b);

    x1 += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
    x2 += h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    require_finite(x1, x2, step + 1);
  }
  return {x1, x2};
}

Dual3d rk4dual(const OdeProblem& problem, const Dual3d& t) {
  detail::require_no_nan(t, "rk4dual");
  const double t_end = t.value();
  const OdeState end = rk4(problem, t_end);
  const double accel = problem.rhs2(t_end, end.x1, end.x2);
  if (!std::isfinite(accel)) {
    throw BlowUpError("second derivative is non-finite at the end point", problem.steps);
  }
  return compose(Dual3d{end.x1, end.x2, accel}, t);
}

OdeProblem duffing_problem() {
  OdeProblem p;
  p.t0 = 0.0;
  p.x10 = 0.3;
  p.x20 = -2.3;
  p.steps = 100;
  p.rhs1 = [](double, double, double x2) { return x2; };
  p.rhs2 = [](double t, double x1, double x2) {
    return 2.1 * std::cos(1.8 * t) - 0.4 * x2 - 1.1 * x1 - x1 * x1 * x1;
  };
  return p;
}

}  // namespace dualnum
