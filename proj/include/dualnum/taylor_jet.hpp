#pragma once

#include <Eigen/Core>

#include "dualnum/dual3.hpp"
#include "dualnum/errors.hpp"

namespace dualnum {

/// Truncated Taylor expansion of order n: coeffs[k] = f^(k)(x) / k!.
///
/// The basis obeys eps_i * eps_j = eps_{i+j} for i + j <= n and 0 otherwise,
/// so multiplication is a Cauchy product that drops every term past order n.
template <typename Scalar>
class TaylorJet {
 public:
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit TaylorJet(Coefficients coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) {
      throw ValidationError("TaylorJet needs order >= 1");
    }
  }

  static TaylorJet variable(Scalar x, int order) {
    TaylorJet jet = constant(x, order);
    jet.coeffs_(1) = Scalar(1);
    return jet;
  }

  static TaylorJet constant(Scalar c, int order) {
    if (order < 1) throw ValidationError("TaylorJet needs order >= 1");
    Coefficients coeffs = Coefficients::Zero(order + 1);
    coeffs(0) = c;
    return TaylorJet(std::move(coeffs));
  }

  /// {f, f', f''} -> {f, f', f''/2}.
  static TaylorJet from_dual(const Dual3<Scalar>& d) {
    Coefficients coeffs(3);
    coeffs << d.value(), d.first(), d.second() / Scalar(2);
    return TaylorJet(std::move(coeffs));
  }

  Dual3<Scalar> to_dual() const {
    if (order() != 2) {
      throw ValidationError("only order-2 jets convert to Dual3");
    }
    return {coeffs_(0), coeffs_(1), Scalar(2) * coeffs_(2)};
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coefficients& coeffs() const { return coeffs_; }
  Scalar operator[](int k) const { return coeffs_(k); }

  /// k-th derivative, k! * coeffs[k].
  Scalar derivative(int k) const {
    Scalar factorial(1);
    for (int i = 2; i <= k; ++i) factorial *= Scalar(i);
    return factorial * coeffs_(k);
  }

 private:
  Coefficients coeffs_;
};

template <typename Scalar>
TaylorJet<Scalar> jet_mul(const TaylorJet<Scalar>& a, const TaylorJet<Scalar>& b) {
  if (a.order() != b.order()) {
    throw ValidationError("jet_mul: order mismatch (" + std::to_string(a.order()) +
                          " vs " + std::to_string(b.order()) + ")");
  }
  const int n = a.order();
  typename TaylorJet<Scalar>::Coefficients c =
      TaylorJet<Scalar>::Coefficients::Zero(n + 1);
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= k; ++i) c(k) += a[i] * b[k - i];
  }
  return TaylorJet<Scalar>(std::move(c));
}

template <typename Scalar>
TaylorJet<Scalar> operator*(const TaylorJet<Scalar>& a, const TaylorJet<Scalar>& b) {
  return jet_mul(a, b);
}

}  // namespace dualnum
