#include "ihte/interp.hpp"

#include <algorithm>
#include <cmath>

#include "ihte/types.hpp"

namespace ihte {

namespace {

double sign(double v) { return (v > 0.0) - (v < 0.0); }

// Three-point endpoint slope with the usual shape-preserving clamps.
double edge_slope(double h0, double h1, double s0, double s1) {
  double d = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
  if (sign(d) != sign(s0)) return 0.0;
  if (sign(s0) != sign(s1) && std::abs(d) > 3.0 * std::abs(s0)) return 3.0 * s0;
  return d;
}

}  // namespace

PchipInterpolant::PchipInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n != y_.size()) fail(errc::invalid_argument, "pchip: x and y lengths differ");
  if (n < 2) fail(errc::invalid_argument, "pchip: need at least two knots");
  if (!strictly_increasing(x_))
    fail(errc::monotonicity_violation, "pchip: knots not strictly increasing");

  d_.resize(n);
  if (n == 2) {
    double s = (y_[1] - y_[0]) / (x_[1] - x_[0]);
    d_[0] = d_[1] = s;
    return;
  }

  std::vector<double> h(n - 1), s(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = x_[k + 1] - x_[k];
    s[k] = (y_[k + 1] - y_[k]) / h[k];
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (s[i - 1] * s[i] <= 0.0) {
      d_[i] = 0.0;
    } else {
      double w1 = 2.0 * h[i] + h[i - 1];
      double w2 = h[i] + 2.0 * h[i - 1];
      d_[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
    }
  }
  d_[0] = edge_slope(h[0], h[1], s[0], s[1]);
  d_[n - 1] = edge_slope(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
}

double PchipInterpolant::eval_on(std::size_t k, double q) const {
  const double h = x_[k + 1] - x_[k];
  const double t = (q - x_[k]) / h;
  const double u = 1.0 - t;
  const double h00 = (1.0 + 2.0 * t) * u * u;
  const double h10 = t * u * u;
  const double h01 = t * t * (3.0 - 2.0 * t);
  const double h11 = t * t * (t - 1.0);
  return h00 * y_[k] + h10 * h * d_[k] + h01 * y_[k + 1] + h11 * h * d_[k + 1];
}

double PchipInterpolant::operator()(double q) const {
  if (q <= x_.front()) return y_.front();
  if (q >= x_.back()) return y_.back();
  std::size_t k = static_cast<std::size_t>(
      std::upper_bound(x_.begin(), x_.end(), q) - x_.begin() - 1);
  return eval_on(k, q);
}

std::vector<double> PchipInterpolant::eval_sorted(const std::vector<double>& q) const {
  std::vector<double> out(q.size());
  std::size_t k = 0;
  const std::size_t last = x_.size() - 2;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double qi = q[i];
    if (qi <= x_.front()) {
      out[i] = y_.front();
      continue;
    }
    if (qi >= x_.back()) {
      out[i] = y_.back();
      continue;
    }
    if (qi < x_[k]) {
      // Out-of-order query; fall back to a search.
      k = static_cast<std::size_t>(std::upper_bound(x_.begin(), x_.end(), qi) - x_.begin() - 1);
    }
    while (k < last && qi >= x_[k + 1]) ++k;
    out[i] = eval_on(k, qi);
  }
  return out;
}

double PchipInterpolant::front_secant() const {
  return (y_[1] - y_[0]) / (x_[1] - x_[0]);
}

double PchipInterpolant::back_secant() const {
  const std::size_t n = x_.size();
  return (y_[n - 1] - y_[n - 2]) / (x_[n - 1] - x_[n - 2]);
}

}  // namespace ihte
