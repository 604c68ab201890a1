#include "dualnum/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dualnum/errors.hpp"

namespace dualnum::oracle {

double central_diff(const std::function<double(double)>& f, double x, int order) {
  if (order != 1 && order != 2) throw ValidationError("central_diff order must be 1 or 2");
  const double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max(1.0, std::abs(x));
  const double h = (order == 1 ? std::cbrt(eps) : std::pow(eps, 0.25)) * scale;

  const double fp = f(x + h);
  const double fm = f(x - h);
  if (!std::isfinite(fp) || !std::isfinite(fm)) {
    throw NumericalError("central_diff: non-finite sample near x = " + std::to_string(x));
  }
  if (order == 1) return (fp - fm) / (2.0 * h);
  const double f0 = f(x);
  if (!std::isfinite(f0)) throw NumericalError("central_diff: non-finite sample at x");
  return (fp - 2.0 * f0 + fm) / (h * h);
}

Eigen::VectorXd jordan_poly_derivs(const Eigen::VectorXd& coeffs, double x, int order) {
  if (coeffs.size() == 0) throw ValidationError("empty polynomial");
  if (order < 1) throw ValidationError("order must be >= 1");
  const int size = order + 1;

  Eigen::MatrixXd X = x * Eigen::MatrixXd::Identity(size, size);
  X.diagonal(1).setOnes();

  // Horner in matrices.
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(size, size);
  Eigen::MatrixXd P = coeffs(coeffs.size() - 1) * I;
  for (Eigen::Index i = coeffs.size() - 2; i >= 0; --i) P = P * X + coeffs(i) * I;

  // The first row of f(X) is f(x), f'(x), f''(x)/2!, ...
  Eigen::VectorXd derivs(size);
  double factorial = 1.0;
  for (int k = 0; k < size; ++k) {
    if (k > 1) factorial *= k;
    derivs(k) = factorial * P(0, k);
  }
  return derivs;
}

Eigen::MatrixXd Tridiagonal::dense() const {
  const int n = size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m.diagonal() = diag;
  if (n > 1) {
    m.diagonal(1) = upper;
    m.diagonal(-1) = lower;
  }
  return m;
}

Tridiagonal Tridiagonal::spline_matrix(int n) {
  Tridiagonal t;
  t.diag = Eigen::VectorXd::Constant(n, 4.0);
  t.diag(0) = 2.0;
  t.diag(n - 1) = 2.0;
  t.upper = Eigen::VectorXd::Ones(n - 1);
  t.lower = Eigen::VectorXd::Ones(n - 1);
  return t;
}

Eigen::MatrixXd usmani_inverse(const Tridiagonal& m) {
  const int n = m.size();
  if (n < 1) throw ValidationError("empty tridiagonal matrix");
  if (n > kUsmaniMaxSize) {
    throw UnsupportedSizeError("usmani_inverse supports n <= " +
                               std::to_string(kUsmaniMaxSize));
  }
  if (m.upper.size() != n - 1 || m.lower.size() != n - 1) {
    throw ValidationError("tridiagonal bands have inconsistent sizes");
  }

  // 1-based: a_i = diag(i-1), b_i = upper(i-1), c_i = lower(i-1).
  auto a = [&](int i) { return m.diag(i - 1); };
  auto b = [&](int i) { return m.upper(i - 1); };
  auto c = [&](int i) { return m.lower(i - 1); };

  // theta_0 .. theta_n
  Eigen::VectorXd theta(n + 1);
  theta(0) = 1.0;
  theta(1) = a(1);
  for (int i = 2; i <= n; ++i) {
    theta(i) = a(i) * theta(i - 1) - b(i - 1) * c(i - 1) * theta(i - 2);
  }
  // phi_1 .. phi_{n+1}, stored at the same index
  Eigen::VectorXd phi(n + 2);
  phi(n + 1) = 1.0;
  phi(n) = a(n);
  for (int i = n - 1; i >= 1; --i) {
    phi(i) = a(i) * phi(i + 1) - b(i) * c(i) * phi(i + 2);
  }
  if (!theta.allFinite() || !phi.segment(1, n + 1).allFinite()) {
    throw NumericalError("tridiagonal recurrences overflowed");
  }
  if (theta(n) == 0.0) throw SingularDerivativeError("tridiagonal matrix is singular");

  Eigen::MatrixXd inv(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double sign = (i + j) % 2 == 0 ? 1.0 : -1.0;
      double entry = sign / theta(n);
      if (i <= j) {
        for (int k = i; k < j; ++k) entry *= b(k);
        entry *= theta(i - 1) * phi(j + 1);
      } else {
        for (int k = j; k < i; ++k) entry *= c(k);
        entry *= theta(j - 1) * phi(i + 1);
      }
      inv(i - 1, j - 1) = entry;
    }
  }
  return inv;
}

}  // namespace dualnum::oracle
