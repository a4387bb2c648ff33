#include "ihte/phasemap.hpp"

#include <cmath>
#include <numbers>

namespace ihte {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

DensityCoeffs density_coeffs(const ProtophaseSeries& theta, int k_max) {
  if (k_max < 1) fail(errc::invalid_argument, "density_coeffs: k_max must be >= 1");
  if (theta.size() < 2) fail(errc::insufficient_data, "density_coeffs: empty series");
  const double span_phase = theta.values.back() - theta.values.front();
  if (span_phase < 20.0 * two_pi)
    fail(errc::insufficient_data,
         "density_coeffs: protophase must span at least 20 cycles");

  const std::size_t n = theta.size();
  const double window = theta.span();

  // trapezoid weights on the uniform time grid; exp(i k theta) by recurrence
  DensityCoeffs out;
  out.k_max = k_max;
  out.F.assign(static_cast<std::size_t>(k_max), {0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    const double wgt = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    const std::complex<double> base(std::cos(theta.values[i]), -std::sin(theta.values[i]));
    std::complex<double> pw = base;
    for (int k = 1; k <= k_max; ++k) {
      out.F[static_cast<std::size_t>(k - 1)] += wgt * pw;
      pw *= base;
    }
  }
  const double norm = theta.dt / window;
  for (auto& f : out.F) f *= norm;
  return out;
}

ProtophaseSeries to_phase(const ProtophaseSeries& theta, const DensityCoeffs& coeffs,
                          bool threshold) {
  const std::size_t n = theta.size();
  if (n == 0) fail(errc::insufficient_data, "to_phase: empty series");

  const double floor_mag =
      threshold ? 2.0 / std::sqrt(static_cast<double>(n)) : 0.0;
  std::vector<std::complex<double>> f_used(coeffs.F.size(), {0.0, 0.0});
  for (std::size_t k = 0; k < coeffs.F.size(); ++k)
    if (std::abs(coeffs.F[k]) >= floor_mag) f_used[k] = coeffs.F[k];

  ProtophaseSeries psi;
  psi.t0 = theta.t0;
  psi.dt = theta.dt;
  psi.values.resize(n);

  double max_imag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double th = theta.values[i];
    const std::complex<double> base(std::cos(th), std::sin(th));
    std::complex<double> pw = base;
    std::complex<double> sum(0.0, 0.0);
    const int k_top = static_cast<int>(f_used.size());
    for (int k = 1; k <= k_top; ++k) {
      const std::complex<double>& fk = f_used[static_cast<std::size_t>(k - 1)];
      if (fk != std::complex<double>(0.0, 0.0)) {
        const std::complex<double> ik(0.0, static_cast<double>(k));
        const std::complex<double> term = fk / ik * (pw - 1.0);
        sum += term + std::conj(term);  // the -k partner
      }
      pw *= base;
    }
    max_imag = std::max(max_imag, std::abs(sum.imag()));
    psi.values[i] = th + sum.real();
  }
  if (max_imag > 1e-10)
    fail(errc::internal_invariant, "to_phase: residual imaginary part " + std::to_string(max_imag));

  // anchor psi to theta at the first sample
  const double shift = theta.values[0] - psi.values[0];
  for (double& v : psi.values) v += shift;

  if (!strictly_increasing(psi.values)) {
    double bound = 0.0;
    for (const auto& f : f_used) bound += 2.0 * std::abs(f);
    fail(errc::internal_invariant,
         "to_phase: non-monotone output (sum of 2|F_k| = " + std::to_string(bound) +
             "; the monotonicity bound requires < 1)");
  }
  return psi;
}

double PeriodicTable::operator()(double angle) const {
  const std::size_t g = values.size();
  double pos = std::fmod(angle, two_pi);
  if (pos < 0.0) pos += two_pi;
  const double u = pos / two_pi * static_cast<double>(g);
  const std::size_t i0 = std::min(static_cast<std::size_t>(u), g - 1);
  const std::size_t i1 = (i0 + 1) % g;
  const double f = u - static_cast<double>(i0);
  return (1.0 - f) * values[i0] + f * values[i1];
}

ProtophaseSeries phase_from_rate(const ProtophaseSeries& theta, const PeriodicTable& f) {
  if (f.values.size() < 4) fail(errc::invalid_argument, "phase_from_rate: table too small");
  for (double v : f.values)
    if (!(v > 0.0)) fail(errc::invalid_argument, "phase_from_rate: rate must be positive");

  // antiderivative of 1/f over one cycle on a fine uniform grid
  const std::size_t fine = std::max<std::size_t>(4096, f.values.size() * 8);
  const double h = two_pi / static_cast<double>(fine);
  std::vector<double> anti(fine + 1, 0.0);
  double prev = 1.0 / f(0.0);
  for (std::size_t i = 1; i <= fine; ++i) {
    const double cur = 1.0 / f(h * static_cast<double>(i));
    anti[i] = anti[i - 1] + 0.5 * (prev + cur) * h;
    prev = cur;
  }
  const double total = anti[fine];
  const double omega = two_pi / total;

  auto eval_anti = [&](double th) {
    const double cycles = std::floor(th / two_pi);
    double rem = th - cycles * two_pi;
    const double u = rem / h;
    std::size_t i0 = std::min(static_cast<std::size_t>(u), fine - 1);
    const double frac = u - static_cast<double>(i0);
    const double within = (1.0 - frac) * anti[i0] + frac * anti[i0 + 1];
    return cycles * total + within;
  };

  ProtophaseSeries phi;
  phi.t0 = theta.t0;
  phi.dt = theta.dt;
  phi.values.resize(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i)
    phi.values[i] = omega * eval_anti(theta.values[i]);
  return phi;
}

}  // namespace ihte
