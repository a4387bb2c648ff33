#include "ihte/metrics.hpp"

#include <cmath>

namespace ihte {

namespace {

struct Window {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
};

Window interior_window(double t0, double dt, std::size_t n, double frac) {
  if (n < 4) fail(errc::insufficient_data, "metrics: series too short");
  if (frac < 0.0 || frac >= 0.5)
    fail(errc::invalid_argument, "metrics: window fraction must lie in [0, 0.5)");
  const double span = dt * static_cast<double>(n - 1);
  const double tmin = t0 + frac * span;
  const double tmax = t0 + (1.0 - frac) * span;
  Window w;
  w.first = static_cast<std::size_t>(std::ceil((tmin - t0) / dt - 1e-9));
  w.last = static_cast<std::size_t>(std::floor((tmax - t0) / dt + 1e-9));
  if (w.last >= n) w.last = n - 1;
  if (w.last <= w.first + 1) fail(errc::insufficient_data, "metrics: interior window empty");
  return w;
}

double trap_weight(std::size_t i, const Window& w) {
  return (i == w.first || i == w.last) ? 0.5 : 1.0;
}

}  // namespace

LinearTrend linear_trend(const ProtophaseSeries& q, double window_frac) {
  const Window w = interior_window(q.t0, q.dt, q.size(), window_frac);
  double sw = 0.0, st = 0.0, sv = 0.0;
  for (std::size_t i = w.first; i <= w.last; ++i) {
    const double wi = trap_weight(i, w);
    sw += wi;
    st += wi * q.time(i);
    sv += wi * q.values[i];
  }
  const double t_mean = st / sw;
  const double v_mean = sv / sw;
  double num = 0.0, den = 0.0;
  for (std::size_t i = w.first; i <= w.last; ++i) {
    const double wi = trap_weight(i, w);
    const double dt_c = q.time(i) - t_mean;
    num += wi * dt_c * (q.values[i] - v_mean);
    den += wi * dt_c * dt_c;
  }
  if (den == 0.0) fail(errc::invalid_argument, "linear_trend: degenerate time grid");
  LinearTrend out;
  out.slope = num / den;
  out.intercept = v_mean - out.slope * t_mean;
  return out;
}

double mean_frequency(const ProtophaseSeries& q, double window_frac) {
  double lo = q.values.front(), hi = lo;
  for (double v : q.values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == lo) fail(errc::invalid_argument, "mean_frequency: constant series");
  return linear_trend(q, window_frac).slope;
}

double phase_error(const ProtophaseSeries& q, const ProtophaseSeries& phi,
                   double window_frac, bool mean_match) {
  if (q.size() != phi.size() || q.t0 != phi.t0 || q.dt != phi.dt)
    fail(errc::invalid_argument, "phase_error: series must share the grid");
  const Window w = interior_window(phi.t0, phi.dt, phi.size(), window_frac);
  const LinearTrend trend = linear_trend(phi, window_frac);

  // N1: energy of the true modulation about its regression line
  double sw = 0.0, mean_resid = 0.0;
  std::vector<double> detrended(phi.size(), 0.0);
  for (std::size_t i = w.first; i <= w.last; ++i) {
    const double wi = trap_weight(i, w);
    detrended[i] = phi.values[i] - trend.slope * phi.time(i);
    sw += wi;
    mean_resid += wi * detrended[i];
  }
  mean_resid /= sw;
  double n1 = 0.0;
  for (std::size_t i = w.first; i <= w.last; ++i) {
    const double e = detrended[i] - mean_resid;
    n1 += trap_weight(i, w) * e * e;
  }
  if (n1 <= 1e-12 * sw)
    fail(errc::normalization_degenerate,
         "phase_error: reference phase has no modulation to normalize against");

  double shift = 0.0;
  if (mean_match) {
    double acc = 0.0;
    for (std::size_t i = w.first; i <= w.last; ++i)
      acc += trap_weight(i, w) * (q.values[i] - phi.values[i]);
    shift = acc / sw;
  }
  double num = 0.0;
  for (std::size_t i = w.first; i <= w.last; ++i) {
    const double d = q.values[i] - phi.values[i] - shift;
    num += trap_weight(i, w) * d * d;
  }
  return std::sqrt(num / n1);
}

double freq_error(const TimeSeries& qdot, const TimeSeries& phidot, double omega_tilde,
                  double window_frac) {
  if (qdot.size() != phidot.size() || qdot.t0 != phidot.t0 || qdot.dt != phidot.dt)
    fail(errc::invalid_argument, "freq_error: series must share the grid");
  const Window w = interior_window(phidot.t0, phidot.dt, phidot.size(), window_frac);

  double n2 = 0.0, num = 0.0, sw = 0.0;
  for (std::size_t i = w.first; i <= w.last; ++i) {
    const double wi = trap_weight(i, w);
    const double e = phidot.values[i] - omega_tilde;
    const double d = qdot.values[i] - phidot.values[i];
    n2 += wi * e * e;
    num += wi * d * d;
    sw += wi;
  }
  if (n2 <= 1e-12 * sw)
    fail(errc::normalization_degenerate,
         "freq_error: reference frequency has no modulation to normalize against");
  return std::sqrt(num / n2);
}

TimeSeries modulation(const ProtophaseSeries& q, double omega_tilde) {
  TimeSeries out;
  out.t0 = q.t0;
  out.dt = q.dt;
  out.values.resize(q.size());
  double mean_q = 0.0, mean_t = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    mean_q += q.values[i];
    mean_t += q.time(i);
  }
  mean_q /= static_cast<double>(q.size());
  mean_t /= static_cast<double>(q.size());
  const double intercept = mean_q - omega_tilde * mean_t;
  for (std::size_t i = 0; i < q.size(); ++i)
    out.values[i] = q.values[i] - omega_tilde * q.time(i) - intercept;
  return out;
}

}  // namespace ihte
