#pragma once

// The worked examples as library calls. The CLI in tools/ is a thin layer
// over these; tests call them directly.

#include <string>
#include <vector>

#include "dualnum/mechanism.hpp"
#include "dualnum/result_record.hpp"
#include "dualnum/root_find.hpp"
#include "dualnum/spline.hpp"

namespace dualnum {

/// u(x) from cos(ux) - u^3 + x + sin(u^2 x) = 0 at x0 = 0.7 (u0 = 2, 100
/// iterations), with g1 = sin(u(x)) + x and g2 = u(sin x + x^2).
std::vector<ResultRecord> cmd_nr_example1(RootMethod method = RootMethod::newton);

enum class MechanismFn { two_sin_squared, identity };

/// Rows "f(phi(x0))", "phi(f(x0))" and "loop_residual" (|residual| of the
/// loop equation at phi(x0)).
std::vector<ResultRecord> cmd_mechanism(double x0 = 2.0,
                                        MechanismFn fn = MechanismFn::two_sin_squared,
                                        double phi0 = kMechanismPhiGuess);

/// Rows "y" = y(at), "f" = x sin^2(y(x)) and "g" = y(x sin^2 x), all at `at`.
std::vector<ResultRecord> cmd_spline(const SplineData& data, double at,
                                     const std::string& provenance);

/// Rows "f1" (stationary frequency with the spline's slope and curvature
/// there) and "alpha_s".
std::vector<ResultRecord> cmd_diffusivity(const SplineData& data, double thickness, double x0,
                                          int iters, const std::string& provenance);

/// Rows "f", "f(g(t))" and "g(f(t))" for the Duffing fixture, g = sin.
std::vector<ResultRecord> cmd_duffing(double t = 1.0, int steps = 100);

}  // namespace dualnum
