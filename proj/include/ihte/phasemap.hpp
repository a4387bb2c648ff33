#pragma once

#include <complex>

#include "ihte/types.hpp"

namespace ihte {

/// Fourier coefficients of the protophase density,
///   F_k = T^{-1} integral of exp(-i k theta(t)) dt,  k = 1..k_max,
/// with F_0 = 1 and F_{-k} = conj(F_k) implied.
struct DensityCoeffs {
  int k_max = 24;
  std::vector<std::complex<double>> F;  // F[k-1] holds F_k
};

DensityCoeffs density_coeffs(const ProtophaseSeries& theta, int k_max = 24);

/// Density-flattening transformation
///   psi = theta + sum_{k != 0} F_k (ik)^{-1} [exp(ik theta) - 1],
/// anchored so psi equals theta at the first sample. Coefficients below
/// `threshold` in magnitude are dropped when thresholding is on.
ProtophaseSeries to_phase(const ProtophaseSeries& theta, const DensityCoeffs& coeffs,
                          bool threshold = true);

/// Tabulated 2*pi-periodic function on a uniform grid over [0, 2*pi),
/// evaluated by linear interpolation with periodic wrap.
struct PeriodicTable {
  std::vector<double> values;

  double operator()(double angle) const;
};

/// Rate-based inversion: phi = integral of omega/f along theta with omega
/// chosen so that phi gains 2*pi per 2*pi of theta. The test oracle for
/// to_phase on synthetic data.
ProtophaseSeries phase_from_rate(const ProtophaseSeries& theta, const PeriodicTable& f);

}  // namespace ihte
