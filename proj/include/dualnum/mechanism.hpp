#pragma once

#include "dualnum/dual3.hpp"
#include "dualnum/root_find.hpp"

namespace dualnum {

/// Constants of the RRRCR spatial linkage. c1 and c2 are the cosines paired
/// with s1 and s2, taken on the positive branch.
struct MechanismParams {
  double L = 0.0;
  double l = 0.0;
  double a = 0.0;
  double R = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double b = 0.0;
  double e = 0.0;

  double c1() const;
  double c2() const;

  /// The published parameter set.
  static MechanismParams reference();
};

/// Initial guess for the output angle that lands on the published branch.
inline constexpr double kMechanismPhiGuess = 1.0;

/// Loop-closure residual relating output angle phi to input angle theta.
Dual3d loop_closure(const MechanismParams& p, const Dual3d& phi, const Dual3d& theta);

/// Output angle phi(theta) with derivatives with respect to the seed in
/// `theta`. cfg.u0 is the initial guess for phi.
Dual3d mechanism_phi(const MechanismParams& p, const Dual3d& theta, const RootConfig& cfg);

}  // namespace dualnum
