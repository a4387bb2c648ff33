#pragma once

#include <cstddef>
#include <vector>

namespace ihte {

/// Shape-preserving cubic Hermite interpolant (Fritsch-Carlson slopes).
/// Monotone data yields a monotone interpolant, and the interpolant never
/// overshoots the data between knots.
class PchipInterpolant {
 public:
  PchipInterpolant(std::vector<double> x, std::vector<double> y);

  /// Evaluate at a single point. Queries outside [x.front(), x.back()]
  /// are clamped to the boundary knots.
  double operator()(double q) const;

  /// Evaluate at a non-decreasing sequence of query points in O(n + m).
  std::vector<double> eval_sorted(const std::vector<double>& q) const;

  /// Secant slope of the first / last knot interval.
  double front_secant() const;
  double back_secant() const;

  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }
  double y_front() const { return y_.front(); }
  double y_back() const { return y_.back(); }

 private:
  double eval_on(std::size_t k, double q) const;

  std::vector<double> x_, y_, d_;
};

}  // namespace ihte
