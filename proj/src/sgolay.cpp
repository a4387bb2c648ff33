#include "ihte/sgolay.hpp"

#include <cmath>
#include <cstddef>

namespace ihte {

void SGSpec::validate() const {
  if (window < 3 || window % 2 == 0)
    fail(errc::invalid_argument, "sg: window must be odd and >= 3");
  if (order < 0 || order >= window)
    fail(errc::invalid_argument, "sg: order must satisfy 0 <= order < window");
  if (repeats < 1) fail(errc::invalid_argument, "sg: repeats must be >= 1");
}

namespace detail {

namespace {

// Gram polynomial P_k^{m,s}(x) evaluated via the standard three-term
// recursion; s is the derivative order. Long double keeps order-12 weights
// accurate to ~1e-15.
long double gram_poly(int k, int m, int s, long double x) {
  if (k < 0) return 0.0L;
  // rows for derivative orders 0..s, recursed jointly over k
  std::vector<std::vector<long double>> p(static_cast<std::size_t>(s) + 1,
                                          std::vector<long double>(static_cast<std::size_t>(k) + 1, 0.0L));
  for (int d = 0; d <= s; ++d) p[d][0] = (d == 0) ? 1.0L : 0.0L;
  for (int kk = 1; kk <= k; ++kk) {
    const long double a = (4.0L * kk - 2.0L) / (kk * (2.0L * m - kk + 1.0L));
    const long double b =
        ((kk - 1.0L) * (2.0L * m + kk)) / (kk * (2.0L * m - kk + 1.0L));
    for (int d = 0; d <= s; ++d) {
      long double prev1 = p[d][kk - 1];
      long double prev2 = (kk >= 2) ? p[d][kk - 2] : 0.0L;
      long double lower = (d >= 1) ? p[d - 1][kk - 1] : 0.0L;
      p[d][kk] = a * (x * prev1 + d * lower) - b * prev2;
    }
  }
  return p[s][k];
}

// Generalized factorial a(a-1)...(a-b+1).
long double gen_fact(int a, int b) {
  long double g = 1.0L;
  for (int j = a - b + 1; j <= a; ++j) g *= j;
  return g;
}

}  // namespace

std::vector<std::vector<double>> sg_weights(int m, int order, int s) {
  const int w = 2 * m + 1;
  std::vector<std::vector<double>> weights(static_cast<std::size_t>(w),
                                           std::vector<double>(static_cast<std::size_t>(w), 0.0));
  for (int t = -m; t <= m; ++t) {
    for (int i = -m; i <= m; ++i) {
      long double sum = 0.0L;
      for (int k = 0; k <= order; ++k) {
        long double c = (2.0L * k + 1.0L) * gen_fact(2 * m, k) / gen_fact(2 * m + k + 1, k + 1);
        sum += c * gram_poly(k, m, 0, static_cast<long double>(i)) *
               gram_poly(k, m, s, static_cast<long double>(t));
      }
      weights[static_cast<std::size_t>(t + m)][static_cast<std::size_t>(i + m)] =
          static_cast<double>(sum);
    }
  }
  return weights;
}

}  // namespace detail

namespace {

// One filter pass; `s` selects smoothing (0) or differentiation (1).
std::vector<double> apply_pass(const std::vector<double>& in, int m,
                               const std::vector<std::vector<double>>& w) {
  const std::size_t n = in.size();
  std::vector<double> out(n);
  const std::size_t width = static_cast<std::size_t>(2 * m + 1);
  const std::vector<double>& centered = w[static_cast<std::size_t>(m)];
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t base;
    const std::vector<double>* row;
    if (p < static_cast<std::size_t>(m)) {
      base = 0;
      row = &w[p];  // t = p - m
    } else if (p + static_cast<std::size_t>(m) >= n) {
      base = n - width;
      row = &w[static_cast<std::size_t>(2 * m) - (n - 1 - p)];  // t = p - (n-1-m)
    } else {
      base = p - static_cast<std::size_t>(m);
      row = &centered;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < width; ++i) acc += (*row)[i] * in[base + i];
    out[p] = acc;
  }
  return out;
}

}  // namespace

TimeSeries sg_smooth(const TimeSeries& sig, const SGSpec& spec) {
  spec.validate();
  if (sig.size() < static_cast<std::size_t>(spec.window))
    fail(errc::insufficient_data, "sg: signal shorter than the filter window");
  const int m = spec.window / 2;
  const auto w = detail::sg_weights(m, spec.order, 0);
  TimeSeries out = sig;
  for (int r = 0; r < spec.repeats; ++r) out.values = apply_pass(out.values, m, w);
  return out;
}

TimeSeries sg_derivative(const TimeSeries& sig, const SGSpec& spec) {
  spec.validate();
  if (sig.size() < static_cast<std::size_t>(spec.window))
    fail(errc::insufficient_data, "sg: signal shorter than the filter window");
  if (sig.dt <= 0.0) fail(errc::invalid_argument, "sg: dt must be positive");
  const int m = spec.window / 2;
  TimeSeries smoothed = sg_smooth(sig, spec);
  const auto w1 = detail::sg_weights(m, spec.order, 1);
  TimeSeries out = sig;
  out.values = apply_pass(smoothed.values, m, w1);
  for (double& v : out.values) v /= sig.dt;
  return out;
}

}  // namespace ihte
