#include "ihte/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ihte/metrics.hpp"

namespace ihte {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

// Offsets around the nearest node where exp[kappa(cos d - 1)] is above the
// double-precision floor; beyond them the kernel contributes nothing.
// Returns -1 when the kernel is too broad to truncate.
int kernel_reach(double kappa, int grid_size) {
  const double arg = 37.0 / kappa;
  if (arg >= 2.0) return -1;
  const double d_max = std::acos(1.0 - arg);
  const int reach = static_cast<int>(std::ceil(d_max / (two_pi / grid_size))) + 1;
  return 2 * reach + 1 <= grid_size ? reach : -1;
}

}  // namespace

double CouplingSurface::node(int i) const {
  return two_pi * static_cast<double>(i) / static_cast<double>(grid_size);
}

CouplingSurface fit_coupling(const ProtophaseSeries& phi, const ProtophaseSeries& eta,
                             const TimeSeries& rate, double kappa, int grid_size) {
  const std::size_t n = phi.size();
  if (eta.size() != n || rate.size() != n)
    fail(errc::invalid_argument, "fit_coupling: series must share the grid");
  if (!(kappa > 0.0)) fail(errc::invalid_argument, "fit_coupling: kappa must be positive");
  if (grid_size < 8) fail(errc::invalid_argument, "fit_coupling: grid too small");
  if (n < 1024) fail(errc::insufficient_data, "fit_coupling: too few samples");

  const double omega_tilde = mean_frequency(phi, 0.0);
  const int g = grid_size;
  const double bin = two_pi / g;
  const int reach = kernel_reach(kappa, g);

  std::vector<double> num(static_cast<std::size_t>(g) * g, 0.0);
  std::vector<double> den(static_cast<std::size_t>(g) * g, 0.0);

  if (reach >= 0) {
    // narrow kernel: rank-1 update on the nodes the kernel actually touches
    std::vector<double> wx(static_cast<std::size_t>(2 * reach + 1));
    std::vector<double> wy(static_cast<std::size_t>(2 * reach + 1));
    for (std::size_t s = 0; s < n; ++s) {
      double px = std::fmod(phi.values[s], two_pi);
      if (px < 0.0) px += two_pi;
      double py = std::fmod(eta.values[s], two_pi);
      if (py < 0.0) py += two_pi;
      const int ix = static_cast<int>(std::lround(px / bin));
      const int iy = static_cast<int>(std::lround(py / bin));

      for (int o = -reach; o <= reach; ++o) {
        const double dx = static_cast<double>(ix + o) * bin - px;
        const double dy = static_cast<double>(iy + o) * bin - py;
        wx[static_cast<std::size_t>(o + reach)] = std::exp(kappa * (std::cos(dx) - 1.0));
        wy[static_cast<std::size_t>(o + reach)] = std::exp(kappa * (std::cos(dy) - 1.0));
      }
      const double r = rate.values[s];
      for (int ox = -reach; ox <= reach; ++ox) {
        const int gx = ((ix + ox) % g + g) % g;
        const double kx = wx[static_cast<std::size_t>(ox + reach)];
        double* num_row = num.data() + static_cast<std::size_t>(gx) * g;
        double* den_row = den.data() + static_cast<std::size_t>(gx) * g;
        for (int oy = -reach; oy <= reach; ++oy) {
          const int gy = ((iy + oy) % g + g) % g;
          const double k = kx * wy[static_cast<std::size_t>(oy + reach)];
          num_row[gy] += k * r;
          den_row[gy] += k;
        }
      }
    }
  } else {
    // broad kernel: every node matters
    std::vector<double> wx(static_cast<std::size_t>(g));
    std::vector<double> wy(static_cast<std::size_t>(g));
    for (std::size_t s = 0; s < n; ++s) {
      for (int i = 0; i < g; ++i) {
        const double node = static_cast<double>(i) * bin;
        wx[static_cast<std::size_t>(i)] =
            std::exp(kappa * (std::cos(node - phi.values[s]) - 1.0));
        wy[static_cast<std::size_t>(i)] =
            std::exp(kappa * (std::cos(node - eta.values[s]) - 1.0));
      }
      const double r = rate.values[s];
      for (int i = 0; i < g; ++i) {
        const double kx = wx[static_cast<std::size_t>(i)];
        double* num_row = num.data() + static_cast<std::size_t>(i) * g;
        double* den_row = den.data() + static_cast<std::size_t>(i) * g;
        for (int j = 0; j < g; ++j) {
          const double k = kx * wy[static_cast<std::size_t>(j)];
          num_row[j] += k * r;
          den_row[j] += k;
        }
      }
    }
  }

  double mean_mass = 0.0;
  for (double d : den) mean_mass += d;
  mean_mass /= static_cast<double>(den.size());
  std::vector<std::pair<int, int>> starved;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      if (den[static_cast<std::size_t>(i) * g + j] < 1e-8 * mean_mass) starved.emplace_back(i, j);
  if (!starved.empty()) {
    std::string cells;
    for (std::size_t k = 0; k < std::min<std::size_t>(starved.size(), 8); ++k)
      cells += " (" + std::to_string(starved[k].first) + "," +
               std::to_string(starved[k].second) + ")";
    if (starved.size() > 8) cells += " ...";
    fail(errc::undersampled_region,
         "fit_coupling: " + std::to_string(starved.size()) +
             " torus cells carry almost no kernel mass:" + cells);
  }

  CouplingSurface out;
  out.grid_size = g;
  out.kappa = kappa;
  out.values.resize(static_cast<std::size_t>(g) * g);
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = num[k] / den[k] - omega_tilde;
  return out;
}

FactorPair factorize(const CouplingSurface& q, int k_steps) {
  if (k_steps < 1) fail(errc::invalid_argument, "factorize: k_steps must be >= 1");
  const int g = q.grid_size;
  if (q.values.size() != static_cast<std::size_t>(g) * static_cast<std::size_t>(g))
    fail(errc::invalid_argument, "factorize: surface size mismatch");
  for (double v : q.values)
    if (!std::isfinite(v)) fail(errc::invalid_argument, "factorize: non-finite surface");

  std::vector<double> z(static_cast<std::size_t>(g), 0.0);
  std::vector<double> p(static_cast<std::size_t>(g));
  for (int j = 0; j < g; ++j) p[static_cast<std::size_t>(j)] = std::cos(q.node(j));

  constexpr double tiny = 1e-300;
  for (int step = 0; step < k_steps; ++step) {
    double p2 = 0.0;
    for (double v : p) p2 += v * v;
    if (p2 < tiny) fail(errc::degenerate_factorization, "factorize: P collapsed to zero");
    for (int i = 0; i < g; ++i) {
      double acc = 0.0;
      for (int j = 0; j < g; ++j) acc += q.at(i, j) * p[static_cast<std::size_t>(j)];
      z[static_cast<std::size_t>(i)] = acc / p2;
    }
    double z2 = 0.0;
    for (double v : z) z2 += v * v;
    if (z2 < tiny) fail(errc::degenerate_factorization, "factorize: Z collapsed to zero");
    for (int j = 0; j < g; ++j) {
      double acc = 0.0;
      for (int i = 0; i < g; ++i) acc += q.at(i, j) * z[static_cast<std::size_t>(i)];
      p[static_cast<std::size_t>(j)] = acc / z2;
    }
  }

  // gauge: RMS(P) = RMS of a unit cosine, positive fundamental cosine term
  double p_rms = 0.0;
  for (double v : p) p_rms += v * v;
  p_rms = std::sqrt(p_rms / g);
  if (p_rms < 1e-150) fail(errc::degenerate_factorization, "factorize: zero P after alternation");
  const double target = 1.0 / std::sqrt(2.0);
  double scale = target / p_rms;
  double a1 = 0.0;
  for (int j = 0; j < g; ++j) a1 += p[static_cast<std::size_t>(j)] * std::cos(q.node(j));
  if (a1 < 0.0) scale = -scale;
  for (double& v : p) v *= scale;
  for (double& v : z) v /= scale;

  FactorPair out;
  out.z = std::move(z);
  out.p = std::move(p);
  double resid = 0.0;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      const double d = q.at(i, j) - out.z[static_cast<std::size_t>(i)] * out.p[static_cast<std::size_t>(j)];
      resid += d * d;
    }
  out.residual = std::sqrt(resid / (static_cast<double>(g) * g));
  return out;
}

}  // namespace ihte
