#include "dualnum/fixtures.hpp"

#include <cmath>
#include <numbers>

namespace dualnum::fixtures {

SplineData log_table() {
  return SplineData({{1.00, 0.0},
                     {1.25, 0.22314355},
                     {1.50, 0.40546511},
                     {1.75, 0.55961579},
                     {2.00, 0.69314718},
                     {2.25, 0.81093022},
                     {2.50, 0.91629073},
                     {2.75, 1.0116009},
                     {3.00, 1.0986123}});
}

double synthetic_peak_frequency() {
  // diffusivity() inverted: mm^2/s over mm.
  const double alpha_mm2 = kTargetDiffusivity * 1e6;
  const double thickness_mm = kSampleThickness * 1e3;
  return alpha_mm2 * 9.0 * std::numbers::pi / (64.0 * thickness_mm);
}

SplineData synthetic_amplitude() {
  const double peak = synthetic_peak_frequency();
  const double sigma = 8.0;
  std::vector<SplinePoint> points;
  for (int i = 0; i <= 38; ++i) {
    const double f = 1.0 + 0.5 * i;
    const double d = (f - peak) / sigma;
    points.push_back({f, std::exp(-0.5 * d * d)});
  }
  return SplineData(std::move(points));
}

namespace {

constexpr double kTableTol = 1e-4;

ReferenceCell cell(const char* label, Component c, double expected) {
  return {label, c, expected, kTableTol, false};
}

}  // namespace

std::vector<ReferenceCell> nr_example1_reference() {
  using C = Component;
  return {cell("u", C::value, 1.3085),  cell("u", C::first, 0.1163),
          cell("u", C::second, -0.9337), cell("g1", C::value, 1.6658),
          cell("g1", C::first, 1.0301),  cell("g1", C::second, -0.2551),
          cell("g2", C::value, 1.2963),  cell("g2", C::first, -0.2556),
          cell("g2", C::second, -1.1425)};
}

std::vector<ReferenceCell> mechanism_reference() {
  using C = Component;
  return {cell("f(phi(x0))", C::value, 1.4279),  cell("f(phi(x0))", C::first, -1.7693),
          cell("f(phi(x0))", C::second, -1.2856), cell("phi(f(x0))", C::value, 1.7817),
          cell("phi(f(x0))", C::first, -1.6171),  cell("phi(f(x0))", C::second, -3.5137),
          {"loop_residual", C::value, 0.0, 1e-9, false}};
}

std::vector<ReferenceCell> spline_reference() {
  using C = Component;
  return {cell("y", C::value, 0.5596), cell("y", C::first, 0.5727),
          cell("f", C::value, 0.4931), cell("f", C::first, 1.1836),
          cell("g", C::value, 0.5272), cell("g", C::first, 0.2097)};
}

std::vector<ReferenceCell> diffusivity_reference() {
  return {{"alpha_s", Component::value, kTargetDiffusivity, 0.02, true}};
}

std::vector<ReferenceCell> duffing_reference() {
  using C = Component;
  return {cell("f", C::value, -0.7474),       cell("f", C::first, -0.1282),
          cell("f", C::second, 0.8140),       cell("f(g(t))", C::value, -0.7144),
          cell("f(g(t))", C::first, -0.1638), cell("f(g(t))", C::second, 0.6608),
          cell("g(f(t))", C::value, -0.6797), cell("g(f(t))", C::first, -0.0940),
          cell("g(f(t))", C::second, 0.6081)};
}

}  // namespace dualnum::fixtures
