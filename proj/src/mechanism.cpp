#include "dualnum/mechanism.hpp"

#include <cmath>

namespace dualnum {

double MechanismParams::c1() const { return std::sqrt(1.0 - s1 * s1); }
double MechanismParams::c2() const { return std::sqrt(1.0 - s2 * s2); }

MechanismParams MechanismParams::reference() {
  MechanismParams p;
  p.L = 0.3933578023;
  p.l = 0.4174323687;
  p.a = 0.9526245468;
  p.R = 0.4484604992;
  p.s1 = 0.6298138891;
  p.s2 = -0.2506389576;
  p.b = 2.0;
  p.e = 1.0;
  return p;
}

Dual3d loop_closure(const MechanismParams& p, const Dual3d& phi, const Dual3d& theta) {
  const double c1 = p.c1();
  const double c2 = p.c2();
  const double a = p.a;
  const double L = p.L;
  const double R = p.R;
  const double s1 = p.s1;
  const double s2 = p.s2;
  const double be = p.b - p.e;
  const double c1c2sq = c1 * c1 * c2 * c2;

  const Dual3d ct = cos(theta);
  const Dual3d st = sin(theta);
  const Dual3d cp = cos(phi);
  const Dual3d sp = sin(phi);

  // Terms independent of both angles.
  const double k = a * a * c1c2sq - 2.0 * a * c1 * c2 * c2 * s1 * be - c1c2sq * be * be +
                   be * be - c1c2sq * p.l * p.l + c1c2sq * L * L;

  Dual3d r = Dual3d::constant(k);
  r += (-2.0 * a * c1c2sq * L) * ct;
  r += (2.0 * a * c1 * c2 * c2 * R) * cp;
  r += (2.0 * c1 * c2 * c2 * L * s1 * be) * ct;
  r += (2.0 * c1 * c2 * L * s2 * be) * st;
  r += (-2.0 * c1 * R * s2 * be) * sp;
  r += (-2.0 * R * s1 * be) * cp;
  r += (c1c2sq * R * R) * (cp * cp);
  r += (-2.0 * c1 * c1 * c2 * L * R) * (st * sp);
  r += (-c1 * c1 * R * R) * (1.0 - 2.0 * (sp * sp));
  r += (-2.0 * c1 * c2 * c2 * L * R) * (ct * cp);
  r += (-2.0 * c1 * c2 * L * R * s1 * s2) * (st * cp);
  r += (2.0 * c1 * R * R * s1 * s2) * (sp * cp);
  r += (R * R) * (cp * cp);
  return r;
}

Dual3d mechanism_phi(const MechanismParams& p, const Dual3d& theta, const RootConfig& cfg) {
  return nr_dual(
      cfg, [&p](const Dual3d& phi, const Dual3d& th) { return loop_closure(p, phi, th); },
      theta);
}

}  // namespace dualnum
