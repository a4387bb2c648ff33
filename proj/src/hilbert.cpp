#include "ihte/hilbert.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "ihte/interp.hpp"

namespace ihte {

namespace {

// FFTW plan creation is not thread-safe; execution is.
std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  double* re = nullptr;
  fftw_complex* cx = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  explicit FftwBuffer(std::size_t n) {
    re = fftw_alloc_real(n);
    cx = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), re, cx, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(static_cast<int>(n), cx, re, FFTW_ESTIMATE);
  }

  ~FftwBuffer() {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(re);
    fftw_free(cx);
  }

  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

}  // namespace

GriddedSignal hilbert_spectral(const GriddedSignal& sig, int oversample) {
  validate_gridded(sig);
  if (oversample < 1) fail(errc::invalid_argument, "hilbert: oversample must be >= 1");

  const std::size_t n = sig.size();
  const std::size_t m = n * static_cast<std::size_t>(oversample);
  const double g0 = sig.grid.front();
  const double g1 = sig.grid.back();
  const double step = (g1 - g0) / static_cast<double>(m - 1);

  std::vector<double> aux_grid(m);
  for (std::size_t i = 0; i < m; ++i) aux_grid[i] = g0 + step * static_cast<double>(i);
  aux_grid.back() = g1;

  PchipInterpolant onto_aux(sig.grid, sig.values);
  std::vector<double> aux = onto_aux.eval_sorted(aux_grid);

  double mean = 0.0;
  for (double v : aux) mean += v;
  mean /= static_cast<double>(m);
  for (double& v : aux) v -= mean;

  FftwBuffer buf(m);
  std::copy(aux.begin(), aux.end(), buf.re);
  fftw_execute(buf.fwd);

  // -i sign(Omega): positive-frequency bins rotate by -i, DC and Nyquist
  // vanish. The c2r transform supplies the conjugate-symmetric half.
  const std::size_t half = m / 2;
  buf.cx[0][0] = 0.0;
  buf.cx[0][1] = 0.0;
  for (std::size_t k = 1; k < half; ++k) {
    const double re = buf.cx[k][0];
    const double im = buf.cx[k][1];
    buf.cx[k][0] = im;
    buf.cx[k][1] = -re;
  }
  if (m % 2 == 0) {
    buf.cx[half][0] = 0.0;
    buf.cx[half][1] = 0.0;
  }
  fftw_execute(buf.bwd);

  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) aux[i] = buf.re[i] * scale;

  PchipInterpolant back(std::move(aux_grid), std::move(aux));
  GriddedSignal out;
  out.grid = sig.grid;
  out.values = back.eval_sorted(sig.grid);
  return out;
}

GriddedSignal hilbert_quadrature(const GriddedSignal& sig) {
  validate_gridded(sig);
  const std::size_t n = sig.size();
  const std::vector<double>& t = sig.grid;
  const std::vector<double>& x = sig.values;

  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  std::vector<double> xc(n);
  for (std::size_t i = 0; i < n; ++i) xc[i] = x[i] - mean;

  auto interp_at = [&](std::size_t j, double tau) {
    // linear between samples j and j+1
    const double w = (tau - t[j]) / (t[j + 1] - t[j]);
    return xc[j] + w * (xc[j + 1] - xc[j]);
  };

  GriddedSignal out;
  out.grid = t;
  out.values.assign(n, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    const double ti = t[i];
    const double dl = i > 0 ? ti - t[i - 1] : t[1] - t[0];
    const double dr = i + 1 < n ? t[i + 1] - ti : t[n - 1] - t[n - 2];
    const double h = std::min(dl, dr);

    // local slope for the symmetric singular cell
    double slope;
    if (i == 0)
      slope = (xc[1] - xc[0]) / (t[1] - t[0]);
    else if (i + 1 == n)
      slope = (xc[n - 1] - xc[n - 2]) / (t[n - 1] - t[n - 2]);
    else
      slope = (xc[i + 1] - xc[i - 1]) / (t[i + 1] - t[i - 1]);

    double acc = -2.0 * slope * h;  // p.v. over [ti - h, ti + h]

    const double lo = ti - h;
    const double hi = ti + h;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      double a = t[j];
      double b = t[j + 1];
      if (b <= lo || a >= hi) {
        // interval fully outside the singular cell
        const double fa = xc[j] / (ti - a);
        const double fb = xc[j + 1] / (ti - b);
        acc += 0.5 * (fa + fb) * (b - a);
        continue;
      }
      // clip away the singular cell, keeping up to two partial pieces
      if (a < lo) {
        const double fa = xc[j] / (ti - a);
        const double fb = interp_at(j, lo) / (ti - lo);
        acc += 0.5 * (fa + fb) * (lo - a);
      }
      if (b > hi) {
        const double fa = interp_at(j, hi) / (ti - hi);
        const double fb = xc[j + 1] / (ti - b);
        acc += 0.5 * (fa + fb) * (b - hi);
      }
    }
    out.values[i] = acc / std::numbers::pi;
  }
  return out;
}

}  // namespace ihte
