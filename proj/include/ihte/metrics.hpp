#pragma once

#include "ihte/types.hpp"

namespace ihte {

/// Normalized reconstruction errors for one iteration step.
struct ErrorReport {
  int n = 0;
  double std_phase = 0.0;
  double std_freq = 0.0;
  double omega_tilde = 0.0;
  double window_min = 0.0;
  double window_max = 0.0;
};

struct LinearTrend {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Weighted least-squares line through (t, values) over the interior window
/// (trapezoid weights, the outer window_frac is skipped on each side).
LinearTrend linear_trend(const ProtophaseSeries& q, double window_frac = 0.1);

/// Regression slope of the series against time over the interior window.
double mean_frequency(const ProtophaseSeries& q, double window_frac = 0.1);

/// Normalized phase error: sqrt of
///   integral (q - phi)^2 / integral (phi - omega_tilde tau - b)^2
/// over the interior window, with the constant offset between q and phi
/// removed first (mean matching) when `mean_match` is set. omega_tilde and b
/// come from the regression of phi. Returns 1 for the trivial linear
/// reconstruction and 0 for the perfect one.
double phase_error(const ProtophaseSeries& q, const ProtophaseSeries& phi,
                   double window_frac = 0.1, bool mean_match = true);

/// Normalized frequency error: sqrt of
///   integral (qdot - phidot)^2 / integral (phidot - omega_tilde)^2
/// over the interior window.
double freq_error(const TimeSeries& qdot, const TimeSeries& phidot, double omega_tilde,
                  double window_frac = 0.1);

/// Residual after removing the linear trend omega_tilde * t + intercept,
/// where the intercept is fixed by the series mean.
TimeSeries modulation(const ProtophaseSeries& q, double omega_tilde);

}  // namespace ihte
