#pragma once

#include "ihte/types.hpp"

namespace ihte {

/// How the protophase is interpolated through the feature knots.
enum class SplineMode { monotone_cubic, linear };

struct IhteOptions {
  int n_iter = 10;
  double feature_quantile = 0.75;
  double feature_refractory = 0.5;
  int oversample = 2;
  SplineMode spline = SplineMode::monotone_cubic;
};

/// Per-iteration embedding diagnostics.
struct IterationDiagnostics {
  int n = 0;
  double band_width = 0.0;      // mean over angular bins of max-min embedding radius
  double closure_gap = 0.0;     // RMS scatter of embedding points at the features
  double curvature_flips = 0.0; // curvature sign changes per period (small-loop density)
};

struct IterationTrace {
  TimeSeries signal;                          // the analysed signal
  std::vector<ProtophaseSeries> protophases;  // [0] is the time grid itself
  std::vector<IterationDiagnostics> diagnostics;
  FeatureSet features;

  const ProtophaseSeries& final_protophase() const { return protophases.back(); }
};

/// The iteration loop: from theta_0 = t, repeatedly take the Hilbert
/// transform of X over the current protophase grid, build the embedding,
/// accumulate arc length and re-spline the protophase through the features.
/// Features are detected once on the time-grid signal and their sample
/// indices reused in every iteration.
IterationTrace run_ihte(const TimeSeries& x, const IhteOptions& opts);

struct Waveform {
  std::vector<double> theta;   // bin centers over [0, 2*pi)
  std::vector<double> mean;    // bin-averaged signal, gaps filled linearly
  std::vector<double> spread;  // per-bin max-min, 0 for empty bins
  std::vector<int> count;
};

/// Bin-average of the signal over the final protophase mod 2*pi.
Waveform waveform(const IterationTrace& trace, int bins = 128);

/// Mean per-bin spread of (theta mod 2*pi, x) pairs: the single-valuedness
/// diagnostic behind the waveform view.
double waveform_band(const ProtophaseSeries& theta, const TimeSeries& x, int bins = 128);

}  // namespace ihte
