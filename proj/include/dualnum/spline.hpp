#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "dualnum/dual3.hpp"

namespace dualnum {

struct SplinePoint {
  double x = 0.0;
  double y = 0.0;
};

/// At least two finite points with strictly increasing x.
class SplineData {
 public:
  /// Throws ValidationError if the invariants do not hold.
  explicit SplineData(std::vector<SplinePoint> points);

  std::span<const SplinePoint> points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }
  const SplinePoint& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<SplinePoint> points_;
};

/// Y(t) = a + b t + c t^2 + d t^3 on t in [0, 1].
struct SplineSegment {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  template <typename T>
  T operator()(const T& t) const {
    return a + t * (b + t * (c + t * d));
  }
};

/// Natural cubic spline. Each segment i is parameterized on unit t, with
/// x = x_i + (x_{i+1} - x_i) t; D holds the knot slopes dY/dt.
///
/// With non-uniform spacing the second derivative in x can jump at interior
/// knots, since continuity is imposed in t.
class SplineModel {
 public:
  SplineModel(SplineData data, Eigen::VectorXd slopes);

  const SplineData& data() const { return data_; }
  const Eigen::VectorXd& slopes() const { return slopes_; }
  std::span<const SplineSegment> segments() const { return segments_; }

  double x_min() const { return data_[0].x; }
  double x_max() const { return data_[data_.size() - 1].x; }

  /// Segment containing x. Interior knots belong to the segment on their
  /// right; x_max belongs to the last segment. Throws OutOfRangeError.
  int segment_index(double x) const;

 private:
  SplineData data_;
  Eigen::VectorXd slopes_;
  std::vector<SplineSegment> segments_;
};

/// The right-hand side R of T D = R:
/// 3 (y2 - y1, y3 - y1, y4 - y2, ..., yn - y(n-2), yn - y(n-1)).
Eigen::VectorXd spline_rhs(const SplineData& data);

/// Solves a tridiagonal system by forward elimination and back substitution.
/// `lower` and `upper` have n - 1 entries. Throws SingularDerivativeError on
/// a zero pivot.
Eigen::VectorXd solve_tridiagonal(const Eigen::VectorXd& lower, const Eigen::VectorXd& diag,
                                  const Eigen::VectorXd& upper, const Eigen::VectorXd& rhs);

SplineModel build_spline(SplineData data);

/// Largest system size accepted by tinv_entry.
inline constexpr int kTinvMaxSize = 500;

/// Entry (s, k), 1-based, of the inverse of the n x n spline matrix
/// T = tridiag(1, [2, 4, ..., 4, 2], 1), from its closed form.
double tinv_entry(int n, int s, int k);

/// D computed as T^-1 R with tinv_entry. O(n^2); kept for cross-checks.
Eigen::VectorXd closed_form_slopes(const SplineData& data);

/// Spline value at x with derivatives carried through from x's seed.
/// Throws OutOfRangeError outside [x_min, x_max].
Dual3d eval_dual(const SplineModel& model, const Dual3d& x);

/// Stationary point of the spline by Newton's method on its first
/// derivative, starting at x0.
///
/// A step that would leave [x_min, x_max] lands halfway to the bound it
/// crossed; starting from an end knot (zero curvature) restarts at the middle
/// of the range. Either move counts as a clamp, and a second clamp raises
/// NoExtremumError.
double find_derivative_root(const SplineModel& model, double x0, int iters);

/// Thermal diffusivity in m^2/s from the sample thickness (metres) and the
/// frequency (Hz) at which the amplitude derivative vanishes:
/// alpha = 64 Ls f1 / (9 pi), evaluated with Ls in mm and alpha in mm^2/s.
double diffusivity(double thickness, double f1);

}  // namespace dualnum
