#include <gtest/gtest.h>

#include <cmath>

#include "dualnum/dual3.hpp"
#include "dualnum/oracle.hpp"
#include "dualnum/spline.hpp"
#include "test_support.hpp"

namespace dualnum::oracle {
namespace {

using testing::uniform;

Dual3d horner(const Eigen::VectorXd& coeffs, const Dual3d& x) {
  Dual3d acc = make_constant(coeffs(coeffs.size() - 1));
  for (Eigen::Index k = coeffs.size() - 2; k >= 0; --k) acc = acc * x + coeffs(k);
  return acc;
}

TEST(CentralDiff, Examples) {
  const auto cube = [](double x) { return x * x * x; };
  EXPECT_NEAR(central_diff(cube, 2.0, 1), 12.0, 1e-8);
  EXPECT_NEAR(central_diff(cube, 2.0, 2), 12.0, 1e-5);
  const auto s = [](double x) { return std::sin(x); };
  EXPECT_NEAR(central_diff(s, 0.0, 1), 1.0, 1e-9);
  EXPECT_NEAR(central_diff(s, 1.0, 2), -std::sin(1.0), 1e-6);
  EXPECT_THROW(central_diff(s, 1.0, 3), ValidationError);
}

TEST(JordanPoly, Cube) {
  Eigen::VectorXd c(4);
  c << 0, 0, 0, 1;
  const Eigen::VectorXd d = jordan_poly_derivs(c, 2.0, 2);
  ASSERT_EQ(d.size(), 3);
  EXPECT_DOUBLE_EQ(d(0), 8.0);
  EXPECT_DOUBLE_EQ(d(1), 12.0);
  EXPECT_DOUBLE_EQ(d(2), 12.0);
}

TEST(JordanPoly, Constant) {
  Eigen::VectorXd c(1);
  c << 5;
  const Eigen::VectorXd d = jordan_poly_derivs(c, -3.0, 2);
  EXPECT_EQ(d, Eigen::Vector3d(5, 0, 0));
}

TEST(JordanPoly, MonomialsExact) {
  for (int k = 0; k <= 8; ++k) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(k + 1);
    c(k) = 1.0;
    const double x = 1.5;
    const Eigen::VectorXd d = jordan_poly_derivs(c, x, 2);
    EXPECT_DOUBLE_EQ(d(0), std::pow(x, k));
    EXPECT_DOUBLE_EQ(d(1), k >= 1 ? k * std::pow(x, k - 1) : 0.0);
    EXPECT_DOUBLE_EQ(d(2), k >= 2 ? k * (k - 1) * std::pow(x, k - 2) : 0.0);
  }
}

TEST(JordanPoly, HigherOrders) {
  // x^5 at 1: 1, 5, 20, 60, 120, 120.
  Eigen::VectorXd c = Eigen::VectorXd::Zero(6);
  c(5) = 1.0;
  const Eigen::VectorXd d = jordan_poly_derivs(c, 1.0, 5);
  Eigen::VectorXd expected(6);
  expected << 1, 5, 20, 60, 120, 120;
  EXPECT_EQ(d, expected);
}

TEST(JordanPoly, AgreesWithDualHorner) {
  auto rng = testing::make_rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::VectorXd c(7);
    for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = uniform(rng, -3, 3);
    const double x = uniform(rng, -2, 2);
    const Eigen::VectorXd d = jordan_poly_derivs(c, x, 2);
    const Dual3d p = horner(c, make_variable(x));
    EXPECT_LE(testing::rel_error(p.value(), d(0)), 1e-12);
    EXPECT_LE(testing::rel_error(p.first(), d(1)), 1e-12);
    EXPECT_LE(testing::rel_error(p.second(), d(2)), 1e-12);
  }
}

TEST(Tridiagonal, SplineMatrix) {
  const Eigen::MatrixXd m = Tridiagonal::spline_matrix(4).dense();
  Eigen::Matrix4d expected;
  expected << 2, 1, 0, 0,
              1, 4, 1, 0,
              0, 1, 4, 1,
              0, 0, 1, 2;
  EXPECT_EQ(m, Eigen::MatrixXd(expected));
}

TEST(Usmani, TwoByTwo) {
  const Eigen::MatrixXd inv = usmani_inverse(Tridiagonal::spline_matrix(2));
  EXPECT_NEAR(inv(0, 0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(inv(0, 1), -1.0 / 3.0, 1e-15);
  EXPECT_NEAR(inv(1, 0), -1.0 / 3.0, 1e-15);
  EXPECT_NEAR(inv(1, 1), 2.0 / 3.0, 1e-15);
}

TEST(Usmani, Identity) {
  Tridiagonal m;
  m.diag = Eigen::VectorXd::Ones(6);
  m.upper = Eigen::VectorXd::Zero(5);
  m.lower = Eigen::VectorXd::Zero(5);
  EXPECT_EQ(usmani_inverse(m), Eigen::MatrixXd::Identity(6, 6));
}

TEST(Usmani, RandomNonsymmetric) {
  auto rng = testing::make_rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 10;
    Tridiagonal m;
    m.diag.resize(n);
    m.upper.resize(n - 1);
    m.lower.resize(n - 1);
    for (int i = 0; i < n - 1; ++i) {
      m.upper(i) = uniform(rng, -1, 1);
      m.lower(i) = uniform(rng, -1, 1);
    }
    for (int i = 0; i < n; ++i) m.diag(i) = (i % 2 ? 1 : -1) * uniform(rng, 2.5, 4.0);
    const Eigen::MatrixXd inv = usmani_inverse(m);
    EXPECT_LE((m.dense() * inv - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Usmani, AgreesWithClosedFormSplineInverse) {
  for (int n = 2; n <= 50; ++n) {
    const Eigen::MatrixXd inv = usmani_inverse(Tridiagonal::spline_matrix(n));
    double worst = 0.0;
    for (int s = 1; s <= n; ++s) {
      for (int k = 1; k <= n; ++k) {
        worst = std::max(worst, std::abs(inv(s - 1, k - 1) - tinv_entry(n, s, k)));
      }
    }
    EXPECT_LE(worst, 1e-10) << "n = " << n;
  }
}

TEST(Usmani, Errors) {
  Tridiagonal singular;
  singular.diag = Eigen::Vector2d(1, 1);
  singular.upper = Eigen::VectorXd::Ones(1);
  singular.lower = Eigen::VectorXd::Ones(1);
  EXPECT_THROW(usmani_inverse(singular), SingularDerivativeError);
  EXPECT_THROW(usmani_inverse(Tridiagonal::spline_matrix(kUsmaniMaxSize + 1)),
               UnsupportedSizeError);

  Tridiagonal ragged = Tridiagonal::spline_matrix(4);
  ragged.upper.resize(2);
  EXPECT_THROW(usmani_inverse(ragged), ValidationError);
}

}  // namespace
}  // namespace dualnum::oracle
