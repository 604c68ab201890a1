#include "dualnum/spline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace dualnum {

SplineData::SplineData(std::vector<SplinePoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw ValidationError("spline needs at least 2 points, got " +
                          std::to_string(points_.size()));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw ValidationError("non-finite spline point at index " + std::to_string(i));
    }
    if (i > 0 && !(p.x > points_[i - 1].x)) {
      throw ValidationError("spline abscissae must be strictly increasing (index " +
                            std::to_string(i) + ")");
    }
  }
}

SplineModel::SplineModel(SplineData data, Eigen::VectorXd slopes)
    : data_(std::move(data)), slopes_(std::move(slopes)) {
  const int n = data_.size();
  if (slopes_.size() != n) {
    throw ValidationError("slope vector size does not match the number of knots");
  }
  segments_.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) {
    const double y0 = data_[i].y;
    const double y1 = data_[i + 1].y;
    const double d0 = slopes_(i);
    const double d1 = slopes_(i + 1);
    segments_.push_back({y0, d0, 3.0 * (y1 - y0) - 2.0 * d0 - d1, 2.0 * (y0 - y1) + d0 + d1});
  }
}

int SplineModel::segment_index(double x) const {
  if (!(x >= x_min() && x <= x_max())) {
    throw OutOfRangeError("x = " + detail::describe(x) + " is outside the spline range [" +
                          detail::describe(x_min()) + ", " + detail::describe(x_max()) + "]");
  }
  const auto pts = data_.points();
  auto it = std::upper_bound(pts.begin(), pts.end(), x,
                             [](double v, const SplinePoint& p) { return v < p.x; });
  const int right = static_cast<int>(it - pts.begin());
  return std::clamp(right - 1, 0, data_.size() - 2);
}

Eigen::VectorXd spline_rhs(const SplineData& data) {
  const int n = data.size();
  Eigen::VectorXd r(n);
  r(0) = 3.0 * (data[1].y - data[0].y);
  for (int i = 1; i + 1 < n; ++i) r(i) = 3.0 * (data[i + 1].y - data[i - 1].y);
  r(n - 1) = 3.0 * (data[n - 1].y - data[n - 2].y);
  return r;
}

Eigen::VectorXd solve_tridiagonal(const Eigen::VectorXd& lower, const Eigen::VectorXd& diag,
                                  const Eigen::VectorXd& upper, const Eigen::VectorXd& rhs) {
  const Eigen::Index n = diag.size();
  if (n == 0 || rhs.size() != n || lower.size() != n - 1 || upper.size() != n - 1) {
    throw ValidationError("tridiagonal system has inconsistent sizes");
  }
  Eigen::VectorXd c_prime(n);
  Eigen::VectorXd d_prime(n);
  double pivot = diag(0);
  if (pivot == 0.0) throw SingularDerivativeError("zero pivot in tridiagonal solve");
  c_prime(0) = n > 1 ? upper(0) / pivot : 0.0;
  d_prime(0) = rhs(0) / pivot;
  for (Eigen::Index i = 1; i < n; ++i) {
    pivot = diag(i) - lower(i - 1) * c_prime(i - 1);
    if (pivot == 0.0) throw SingularDerivativeError("zero pivot in tridiagonal solve");
    c_prime(i) = i + 1 < n ? upper(i) / pivot : 0.0;
    d_prime(i) = (rhs(i) - lower(i - 1) * d_prime(i - 1)) / pivot;
  }
  Eigen::VectorXd x(n);
  x(n - 1) = d_prime(n - 1);
  for (Eigen::Index i = n - 2; i >= 0; --i) x(i) = d_prime(i) - c_prime(i) * x(i + 1);
  return x;
}

SplineModel build_spline(SplineData data) {
  const int n = data.size();
  Eigen::VectorXd diag = Eigen::VectorXd::Constant(n, 4.0);
  diag(0) = 2.0;
  diag(n - 1) = 2.0;
  const Eigen::VectorXd off = Eigen::VectorXd::Ones(n - 1);
  Eigen::VectorXd slopes = solve_tridiagonal(off, diag, off, spline_rhs(data));
  return SplineModel(std::move(data), std::move(slopes));
}

double tinv_entry(int n, int s, int k) {
  if (n < 2) throw ValidationError("tinv_entry needs n >= 2");
  if (n > kTinvMaxSize) {
    throw UnsupportedSizeError("tinv_entry supports n <= " + std::to_string(kTinvMaxSize) +
                               ", got " + std::to_string(n));
  }
  if (s < 1 || s > n || k < 1 || k > n) {
    throw ValidationError("tinv_entry index (" + std::to_string(s) + ", " +
                          std::to_string(k) + ") outside 1.." + std::to_string(n));
  }
  if (s > k) std::swap(s, k);

  const double sqrt3 = std::numbers::sqrt3;
  const double alpha = 2.0 + sqrt3;
  const double alpha_dag = 2.0 - sqrt3;
  const double beta = 2.0 * sqrt3 + 3.0;
  const double beta_dag = 2.0 * sqrt3 - 3.0;
  const double ratio = alpha_dag / alpha;
  const double log_alpha = std::log(alpha);
  const double log_alpha_dag = std::log(alpha_dag);

  const double sign = (s + k) % 2 == 0 ? 1.0 : -1.0;
  const double prefactor =
      0.5 * sign * (1.0 + std::pow(ratio, s - 1)) / (beta_dag - std::pow(ratio, n) * beta);
  const double bracket =
      alpha * std::exp((k + 1) * log_alpha_dag + (s - 1) * log_alpha) +
      alpha_dag * std::exp((s + k) * log_alpha + n * std::log(ratio));
  return prefactor * bracket;
}

Eigen::VectorXd closed_form_slopes(const SplineData& data) {
  const int n = data.size();
  const Eigen::VectorXd r = spline_rhs(data);
  Eigen::VectorXd slopes = Eigen::VectorXd::Zero(n);
  for (int s = 1; s <= n; ++s) {
    for (int k = 1; k <= n; ++k) slopes(s - 1) += tinv_entry(n, s, k) * r(k - 1);
  }
  return slopes;
}

Dual3d eval_dual(const SplineModel& model, const Dual3d& x) {
  detail::require_no_nan(x, "eval_dual");
  const int i = model.segment_index(x.value());
  const auto& data = model.data();
  const double width = data[i + 1].x - data[i].x;
  const Dual3d t = (x - data[i].x) * Dual3d::constant(1.0 / width);
  return model.segments()[static_cast<std::size_t>(i)](t);
}

double find_derivative_root(const SplineModel& model, double x0, int iters) {
  if (iters < 1) throw ValidationError("iteration count must be >= 1");
  model.segment_index(x0);

  const double lo = model.x_min();
  const double hi = model.x_max();
  int clamps = 0;
  auto count_clamp = [&] {
    if (++clamps >= 2) {
      throw NoExtremumError("derivative-root iteration left [" + detail::describe(lo) + ", " +
                            detail::describe(hi) + "] twice; no interior extremum");
    }
  };

  double x = x0;
  for (int k = 0; k < iters; ++k) {
    const Dual3d y = eval_dual(model, Dual3d::variable(x));
    if (y.first() == 0.0) return x;

    // Natural end conditions zero the curvature at both end knots, so the
    // Newton step is undefined there: restart from the middle of the range.
    if (x == lo || x == hi) {
      count_clamp();
      x = 0.5 * (lo + hi);
      continue;
    }
    if (y.second() == 0.0) {
      throw SingularDerivativeError("spline second derivative vanishes at x = " +
                                    detail::describe(x));
    }
    double next = x - y.first() / y.second();
    if (std::isnan(next)) {
      throw NoExtremumError("derivative-root iteration diverged at x = " + detail::describe(x));
    }
    if (next < lo || next > hi) {
      count_clamp();
      next = 0.5 * (x + (next < lo ? lo : hi));
    }
    x = next;
  }

  // Scale the stationarity test by the data's overall slope.
  const auto pts = model.data().points();
  double y_lo = pts.front().y;
  double y_hi = pts.front().y;
  for (const auto& p : pts) {
    y_lo = std::min(y_lo, p.y);
    y_hi = std::max(y_hi, p.y);
  }
  const double slope_scale = std::max((y_hi - y_lo) / (hi - lo), 1.0);
  const double residual = eval_dual(model, Dual3d::variable(x)).first();
  if (!(std::abs(residual) <= 1e-8 * slope_scale)) {
    throw NoExtremumError("no stationary point reached after " + std::to_string(iters) +
                          " iterations (dy/dx = " + detail::describe(residual) + ")");
  }
  return x;
}

double diffusivity(double thickness, double f1) {
  if (!(thickness > 0.0) || !std::isfinite(thickness)) {
    throw ValidationError("thickness must be positive");
  }
  if (!(f1 > 0.0) || !std::isfinite(f1)) {
    throw ValidationError("frequency must be positive");
  }
  // 64 Ls f1 / (9 pi) with Ls in millimetres gives mm^2/s.
  const double thickness_mm = thickness * 1e3;
  const double alpha_mm2 = 64.0 * thickness_mm * f1 / (9.0 * std::numbers::pi);
  return alpha_mm2 * 1e-6;
}

}  // namespace dualnum
