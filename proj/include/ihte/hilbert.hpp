#pragma once

#include "ihte/types.hpp"

namespace ihte {

/// Finite-interval Hilbert transform
///   H[X](t) = p.v./pi * integral of X(tau)/(t - tau) over the window,
/// evaluated on the signal's own (possibly non-uniform) grid, so that
/// H[cos] = sin. The sample mean is removed before the transform and is not
/// restored. Spectral path: monotone-cubic resampling onto a uniform
/// auxiliary grid, the -i sign(Omega) Fourier multiplier, and resampling
/// back. Output grid is bitwise the input grid.
GriddedSignal hilbert_spectral(const GriddedSignal& sig, int oversample = 2);

/// Direct principal-value quadrature on the given grid: trapezoid rule away
/// from the singularity plus an analytic symmetric-cell term from local
/// linearization (p.v. of (a + b(tau-t))/(t-tau) over [t-h, t+h] equals
/// -2bh). O(n^2); the slow reference for hilbert_spectral.
GriddedSignal hilbert_quadrature(const GriddedSignal& sig);

}  // namespace ihte
