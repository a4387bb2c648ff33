#include "ihte/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ihte/interp.hpp"

namespace ihte {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

GriddedSignal arc_length(const Embedding& emb) {
  const std::size_t n = emb.size();
  if (emb.grid.size() != n || emb.y.size() != n)
    fail(errc::invalid_argument, "arc_length: mismatched embedding arrays");
  if (n < 2) fail(errc::insufficient_data, "arc_length: need at least two points");
  if (!strictly_increasing(emb.grid))
    fail(errc::monotonicity_violation, "arc_length: grid not strictly increasing");

  GriddedSignal out;
  out.grid = emb.grid;
  out.values.resize(n);
  out.values[0] = 0.0;
  double acc = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    acc += std::hypot(emb.x[i] - emb.x[i - 1], emb.y[i] - emb.y[i - 1]);
    out.values[i] = acc;
  }
  return out;
}

FeatureSet detect_features(const GriddedSignal& sig, double quantile, double refractory) {
  validate_gridded(sig, 8);
  if (quantile <= 0.0 || quantile >= 1.0)
    fail(errc::invalid_argument, "detect_features: quantile must lie in (0, 1)");
  if (refractory < 0.0)
    fail(errc::invalid_argument, "detect_features: refractory must be non-negative");

  const std::size_t n = sig.size();
  const std::vector<double>& v = sig.values;

  std::vector<double> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  const double threshold =
      sorted[std::min(n - 1, static_cast<std::size_t>(quantile * static_cast<double>(n)))];

  // interior local maxima above the threshold; flat tops take the left sample
  std::vector<std::size_t> candidates;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (v[i] > v[i - 1] && v[i] >= v[i + 1] && v[i] >= threshold) candidates.push_back(i);
  }
  if (candidates.size() < 3)
    fail(errc::insufficient_features,
         "detect_features: found " + std::to_string(candidates.size()) +
             " candidate maxima, need at least 3 (signal too short or quantile too high)");

  std::vector<double> spacing;
  for (std::size_t k = 1; k < candidates.size(); ++k)
    spacing.push_back(sig.grid[candidates[k]] - sig.grid[candidates[k - 1]]);
  std::nth_element(spacing.begin(), spacing.begin() + spacing.size() / 2, spacing.end());
  const double median_spacing = spacing[spacing.size() / 2];
  const double min_gap = refractory * median_spacing;

  // value-ordered greedy thinning: the dominant maximum survives
  std::vector<std::size_t> by_value = candidates;
  std::stable_sort(by_value.begin(), by_value.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  std::vector<std::size_t> accepted;
  for (std::size_t idx : by_value) {
    const double ti = sig.grid[idx];
    bool blocked = false;
    for (std::size_t other : accepted) {
      if (std::abs(sig.grid[other] - ti) < min_gap) {
        blocked = true;
        break;
      }
    }
    if (!blocked) accepted.push_back(idx);
  }
  std::sort(accepted.begin(), accepted.end());

  if (accepted.size() < 3)
    fail(errc::insufficient_features, "detect_features: fewer than 3 features after thinning");

  FeatureSet feats;
  feats.indices = std::move(accepted);
  feats.times.reserve(feats.indices.size());
  for (std::size_t idx : feats.indices) feats.times.push_back(sig.grid[idx]);
  return feats;
}

namespace {

// piecewise-linear theta(L): 2*pi*j + 2*pi*(L - L_j)/(L_{j+1} - L_j)
std::vector<double> eval_linear_knots(const std::vector<double>& knot_l,
                                      const std::vector<double>& knot_theta,
                                      const std::vector<double>& queries) {
  std::vector<double> out(queries.size());
  std::size_t k = 0;
  const std::size_t last = knot_l.size() - 2;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const double q = queries[i];
    if (q < knot_l[k]) k = 0;
    while (k < last && q >= knot_l[k + 1]) ++k;
    const double slope = (knot_theta[k + 1] - knot_theta[k]) / (knot_l[k + 1] - knot_l[k]);
    out[i] = knot_theta[k] + slope * (q - knot_l[k]);
  }
  return out;
}

}  // namespace

ProtophaseSeries protophase_from_length(const GriddedSignal& length, const FeatureSet& feats,
                                        double t0, double dt, ProtophaseInterp interp) {
  if (length.grid.size() != length.values.size())
    fail(errc::invalid_argument, "protophase: mismatched length arrays");
  if (feats.size() < 3)
    fail(errc::insufficient_features, "protophase: need at least 3 features");

  const std::vector<double>& L = length.values;
  std::vector<double> knot_l(feats.size()), knot_theta(feats.size());
  for (std::size_t j = 0; j < feats.size(); ++j) {
    const std::size_t idx = feats.indices[j];
    if (idx >= L.size()) fail(errc::invalid_argument, "protophase: feature index out of range");
    knot_l[j] = L[idx];
    knot_theta[j] = two_pi * static_cast<double>(j);
  }
  if (!strictly_increasing(knot_l))
    fail(errc::internal_invariant, "protophase: arc length not increasing across features");

  ProtophaseSeries theta;
  theta.t0 = t0;
  theta.dt = dt;

  if (interp == ProtophaseInterp::linear) {
    theta.values = eval_linear_knots(knot_l, knot_theta, L);
  } else {
    PchipInterpolant spline(knot_l, knot_theta);
    const double lo = spline.x_front();
    const double hi = spline.x_back();
    const double slope_lo = spline.front_secant();
    const double slope_hi = spline.back_secant();

    theta.values.resize(L.size());
    std::size_t below = 0;
    while (below < L.size() && L[below] < lo) ++below;
    std::size_t above = L.size();
    while (above > 0 && L[above - 1] > hi) --above;

    for (std::size_t i = 0; i < below; ++i)
      theta.values[i] = spline.y_front() + slope_lo * (L[i] - lo);
    if (below < above) {
      std::vector<double> mid(L.begin() + static_cast<std::ptrdiff_t>(below),
                              L.begin() + static_cast<std::ptrdiff_t>(above));
      std::vector<double> vals = spline.eval_sorted(mid);
      std::copy(vals.begin(), vals.end(),
                theta.values.begin() + static_cast<std::ptrdiff_t>(below));
    }
    for (std::size_t i = above; i < L.size(); ++i)
      theta.values[i] = spline.y_back() + slope_hi * (L[i] - hi);
  }

  // Merged zero-length chords evaluate to equal protophase; nudge by one ulp
  // so the series stays usable as an integration grid.
  for (std::size_t i = 1; i < theta.values.size(); ++i) {
    if (theta.values[i] <= theta.values[i - 1]) {
      if (L[i] > L[i - 1])
        fail(errc::internal_invariant, "protophase: spline output not increasing");
      theta.values[i] = std::nextafter(theta.values[i - 1], std::numeric_limits<double>::max());
    }
  }
  return theta;
}

}  // namespace ihte
