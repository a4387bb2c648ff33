#include "ihte/iteration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ihte/embedding.hpp"
#include "ihte/hilbert.hpp"

namespace ihte {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double positive_mod(double v, double m) {
  double r = std::fmod(v, m);
  return r < 0.0 ? r + m : r;
}

IterationDiagnostics embedding_diagnostics(int n, const Embedding& emb,
                                           const ProtophaseSeries& theta,
                                           const FeatureSet& feats) {
  IterationDiagnostics d;
  d.n = n;

  double mean_x = 0.0;
  for (double v : emb.x) mean_x += v;
  mean_x /= static_cast<double>(emb.size());

  constexpr int kBins = 64;
  std::vector<double> lo(kBins, std::numeric_limits<double>::infinity());
  std::vector<double> hi(kBins, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < emb.size(); ++i) {
    const double radius = std::hypot(emb.x[i] - mean_x, emb.y[i]);
    int b = static_cast<int>(positive_mod(theta.values[i], two_pi) / two_pi * kBins);
    b = std::min(b, kBins - 1);
    lo[static_cast<std::size_t>(b)] = std::min(lo[static_cast<std::size_t>(b)], radius);
    hi[static_cast<std::size_t>(b)] = std::max(hi[static_cast<std::size_t>(b)], radius);
  }
  double acc = 0.0;
  int filled = 0;
  for (int b = 0; b < kBins; ++b) {
    if (hi[static_cast<std::size_t>(b)] >= lo[static_cast<std::size_t>(b)]) {
      acc += hi[static_cast<std::size_t>(b)] - lo[static_cast<std::size_t>(b)];
      ++filled;
    }
  }
  d.band_width = filled > 0 ? acc / filled : 0.0;

  // scatter of the embedding points that share zero protophase
  double cx = 0.0, cy = 0.0;
  for (std::size_t idx : feats.indices) {
    cx += emb.x[idx];
    cy += emb.y[idx];
  }
  cx /= static_cast<double>(feats.size());
  cy /= static_cast<double>(feats.size());
  double gap = 0.0;
  for (std::size_t idx : feats.indices) {
    const double dx = emb.x[idx] - cx;
    const double dy = emb.y[idx] - cy;
    gap += dx * dx + dy * dy;
  }
  d.closure_gap = std::sqrt(gap / static_cast<double>(feats.size()));

  // curvature sign flips per period: counts the small loops noise etches
  // into the curve
  long flips = 0;
  for (std::size_t i = 1; i + 1 < emb.size(); ++i) {
    const double ax = emb.x[i] - emb.x[i - 1];
    const double ay = emb.y[i] - emb.y[i - 1];
    const double bx = emb.x[i + 1] - emb.x[i];
    const double by = emb.y[i + 1] - emb.y[i];
    const double cross = ax * by - ay * bx;
    if (i >= 2) {
      const double px = emb.x[i - 1] - emb.x[i - 2];
      const double py = emb.y[i - 1] - emb.y[i - 2];
      const double prev_cross = px * ay - py * ax;
      if (cross * prev_cross < 0.0) ++flips;
    }
  }
  const double periods = (theta.values.back() - theta.values.front()) / two_pi;
  d.curvature_flips = periods > 0.0 ? static_cast<double>(flips) / periods : 0.0;
  return d;
}

}  // namespace

IterationTrace run_ihte(const TimeSeries& x, const IhteOptions& opts) {
  if (opts.n_iter < 1) fail(errc::invalid_argument, "ihte: n_iter must be >= 1");
  if (x.size() < 64) fail(errc::insufficient_data, "ihte: signal too short");
  require_all_finite(x.values, "ihte input");

  IterationTrace trace;
  trace.signal = x;

  ProtophaseSeries theta0;
  theta0.t0 = x.t0;
  theta0.dt = x.dt;
  theta0.values = x.times();
  trace.protophases.push_back(std::move(theta0));

  {
    GriddedSignal time_signal{trace.protophases[0].values, x.values};
    trace.features =
        detect_features(time_signal, opts.feature_quantile, opts.feature_refractory);
  }

  for (int n = 0; n < opts.n_iter; ++n) {
    const ProtophaseSeries& theta = trace.protophases.back();
    GriddedSignal sig{theta.values, x.values};

    GriddedSignal partner;
    try {
      partner = hilbert_spectral(sig, opts.oversample);
    } catch (const Error& e) {
      fail(errc::numerical_failure,
           "ihte: iteration " + std::to_string(n + 1) + ": " + e.what());
    }
    require_all_finite(partner.values, "hilbert output");

    Embedding emb{theta.values, x.values, partner.values};
    GriddedSignal length = arc_length(emb);
    ProtophaseSeries next = protophase_from_length(length, trace.features, x.t0, x.dt);
    require_all_finite(next.values, "protophase");
    if (!strictly_increasing(next.values))
      fail(errc::internal_invariant,
           "ihte: iteration " + std::to_string(n + 1) + " produced a non-monotone protophase");

    trace.diagnostics.push_back(embedding_diagnostics(n + 1, emb, next, trace.features));
    trace.protophases.push_back(std::move(next));
  }
  return trace;
}

Waveform waveform(const IterationTrace& trace, int bins) {
  if (bins < 2) fail(errc::invalid_argument, "waveform: need at least 2 bins");
  const ProtophaseSeries& theta = trace.final_protophase();
  const TimeSeries& x = trace.signal;

  Waveform w;
  w.theta.resize(static_cast<std::size_t>(bins));
  w.mean.assign(static_cast<std::size_t>(bins), 0.0);
  w.spread.assign(static_cast<std::size_t>(bins), 0.0);
  w.count.assign(static_cast<std::size_t>(bins), 0);
  std::vector<double> lo(static_cast<std::size_t>(bins), std::numeric_limits<double>::infinity());
  std::vector<double> hi(static_cast<std::size_t>(bins), -std::numeric_limits<double>::infinity());

  for (int b = 0; b < bins; ++b)
    w.theta[static_cast<std::size_t>(b)] = (b + 0.5) * two_pi / bins;

  for (std::size_t i = 0; i < x.size(); ++i) {
    int b = static_cast<int>(positive_mod(theta.values[i], two_pi) / two_pi * bins);
    b = std::min(b, bins - 1);
    const auto bi = static_cast<std::size_t>(b);
    w.mean[bi] += x.values[i];
    w.count[bi] += 1;
    lo[bi] = std::min(lo[bi], x.values[i]);
    hi[bi] = std::max(hi[bi], x.values[i]);
  }
  for (int b = 0; b < bins; ++b) {
    const auto bi = static_cast<std::size_t>(b);
    if (w.count[bi] > 0) {
      w.mean[bi] /= w.count[bi];
      w.spread[bi] = hi[bi] - lo[bi];
    }
  }
  // fill gaps by linear interpolation between the nearest filled bins (cyclic)
  for (int b = 0; b < bins; ++b) {
    const auto bi = static_cast<std::size_t>(b);
    if (w.count[bi] > 0) continue;
    int prev = b, next = b;
    for (int k = 1; k < bins; ++k) {
      prev = ((b - k) % bins + bins) % bins;
      if (w.count[static_cast<std::size_t>(prev)] > 0) break;
    }
    for (int k = 1; k < bins; ++k) {
      next = (b + k) % bins;
      if (w.count[static_cast<std::size_t>(next)] > 0) break;
    }
    const int d_prev = (b - prev + bins) % bins;
    const int d_total = (next - prev + bins) % bins;
    const double f = d_total > 0 ? static_cast<double>(d_prev) / d_total : 0.0;
    w.mean[bi] = (1.0 - f) * w.mean[static_cast<std::size_t>(prev)] +
                 f * w.mean[static_cast<std::size_t>(next)];
  }
  return w;
}

double waveform_band(const ProtophaseSeries& theta, const TimeSeries& x, int bins) {
  if (theta.size() != x.size())
    fail(errc::invalid_argument, "waveform_band: series lengths differ");
  std::vector<double> lo(static_cast<std::size_t>(bins), std::numeric_limits<double>::infinity());
  std::vector<double> hi(static_cast<std::size_t>(bins), -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < x.size(); ++i) {
    int b = static_cast<int>(positive_mod(theta.values[i], two_pi) / two_pi * bins);
    b = std::min(b, bins - 1);
    lo[static_cast<std::size_t>(b)] = std::min(lo[static_cast<std::size_t>(b)], x.values[i]);
    hi[static_cast<std::size_t>(b)] = std::max(hi[static_cast<std::size_t>(b)], x.values[i]);
  }
  double acc = 0.0;
  int filled = 0;
  for (int b = 0; b < bins; ++b) {
    const auto bi = static_cast<std::size_t>(b);
    if (hi[bi] >= lo[bi]) {
      acc += hi[bi] - lo[bi];
      ++filled;
    }
  }
  return filled > 0 ? acc / filled : 0.0;
}

}  // namespace ihte
