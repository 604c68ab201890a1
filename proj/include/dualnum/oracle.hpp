#pragma once

// Verification machinery that shares no code path with the dual arithmetic:
// finite differences, matrix-function derivatives on a Jordan block, and the
// general tridiagonal inverse from the theta/phi recurrences.

#include <functional>

#include <Eigen/Core>

namespace dualnum::oracle {

/// Central difference of order 1 or 2 with a step scaled to |x|.
double central_diff(const std::function<double(double)>& f, double x, int order);

/// {p(x), p'(x), ..., p^(order)(x)} for the polynomial with the given
/// coefficients (constant term first), obtained by evaluating p on the
/// Jordan block X = x I + N of size order + 1 with explicit matrix products.
Eigen::VectorXd jordan_poly_derivs(const Eigen::VectorXd& coeffs, double x, int order);

/// n x n tridiagonal matrix: diag has n entries, upper and lower n - 1.
struct Tridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd upper;
  Eigen::VectorXd lower;

  int size() const { return static_cast<int>(diag.size()); }
  Eigen::MatrixXd dense() const;

  /// The natural-spline matrix tridiag(1, [2, 4, ..., 4, 2], 1).
  static Tridiagonal spline_matrix(int n);
};

inline constexpr int kUsmaniMaxSize = 200;

/// Full inverse from the theta (ascending) and phi (descending) recurrences.
/// Throws SingularDerivativeError when theta_n == 0.
Eigen::MatrixXd usmani_inverse(const Tridiagonal& m);

}  // namespace dualnum::oracle
