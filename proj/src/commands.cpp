#include "dualnum/commands.hpp"

#include <cmath>

#include "dualnum/ode.hpp"

namespace dualnum {
namespace {

ResultRecord record(std::string label, const Dual3d& d, std::string provenance) {
  return {std::move(label), d.value(), d.first(), d.second(), std::move(provenance)};
}

Dual3d example1_residual(const Dual3d& u, const Dual3d& x) {
  return cos(u * x) - pow(u, 3.0) + x + sin(u * u * x);
}

}  // namespace

std::vector<ResultRecord> cmd_nr_example1(RootMethod method) {
  RootConfig cfg;
  cfg.method = method;
  cfg.u0 = 2.0;
  cfg.max_iters = 100;

  const Dual3d x = Dual3d::variable(0.7);
  const Dual3d u = solve_implicit(cfg, example1_residual, x);
  const Dual3d g1 = sin(u) + x;
  const Dual3d g2 = solve_implicit(cfg, example1_residual, sin(x) + x * x);
  return {record("u", u, "nr-example1"), record("g1", g1, "nr-example1"), record("g2", g2, "nr-example1")};
}

std::vector<ResultRecord> cmd_mechanism(double x0, MechanismFn fn, double phi0) {
  const MechanismParams params = MechanismParams::reference();
  RootConfig cfg;
  cfg.u0 = phi0;

  auto f = [fn](const Dual3d& v) {
    if (fn == MechanismFn::identity) return v;
    const Dual3d s = sin(v);
    return 2.0 * (s * s);
  };

  const Dual3d x = Dual3d::variable(x0);
  const Dual3d phi = mechanism_phi(params, x, cfg);
  const Dual3d f_of_phi = f(phi);
  const Dual3d phi_of_f = mechanism_phi(params, f(x), cfg);
  const double residual =
      loop_closure(params, Dual3d::constant(phi.value()), Dual3d::constant(x0)).value();

  return {record("f(phi(x0))", f_of_phi, "mechanism"), record("phi(f(x0))", phi_of_f, "mechanism"),
          {"loop_residual", std::abs(residual), 0.0, 0.0, "mechanism"}};
}

std::vector<ResultRecord> cmd_spline(const SplineData& data, double at,
                                     const std::string& provenance) {
  const SplineModel model = build_spline(data);
  const Dual3d x = Dual3d::variable(at);
  const Dual3d y = eval_dual(model, x);
  const Dual3d sin_y = sin(y);
  const Dual3d f = x * (sin_y * sin_y);
  const Dual3d sin_x = sin(x);
  const Dual3d g = eval_dual(model, x * (sin_x * sin_x));
  return {record("y", y, provenance), record("f", f, provenance), record("g", g, provenance)};
}

std::vector<ResultRecord> cmd_diffusivity(const SplineData& data, double thickness, double x0,
                                          int iters, const std::string& provenance) {
  if (!(thickness > 0.0)) throw ValidationError("thickness must be positive");
  const SplineModel model = build_spline(data);
  const double f1 = find_derivative_root(model, x0, iters);
  const Dual3d at_root = eval_dual(model, Dual3d::variable(f1));
  const double alpha = diffusivity(thickness, f1);
  return {{"f1", f1, at_root.first(), at_root.second(), provenance},
          {"alpha_s", alpha, 0.0, 0.0, provenance}};
}

std::vector<ResultRecord> cmd_duffing(double t, int steps) {
  OdeProblem problem = duffing_problem();
  problem.steps = steps;
  const Dual3d td = Dual3d::variable(t);
  const Dual3d f = rk4dual(problem, td);
  return {record("f", f, "duffing"), record("f(g(t))", rk4dual(problem, sin(td)), "duffing"),
          record("g(f(t))", sin(f), "duffing")};
}

}  // namespace dualnum
