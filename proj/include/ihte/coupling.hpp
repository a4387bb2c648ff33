#pragma once

#include "ihte/types.hpp"

namespace ihte {

/// Values of the extracted coupling function on a regular grid over
/// [0, 2*pi)^2; values[i*grid_size + j] corresponds to
/// (phi, eta) = (2*pi*i/G, 2*pi*j/G).
struct CouplingSurface {
  int grid_size = 64;
  double kappa = 200.0;
  std::vector<double> values;

  double& at(int i, int j) { return values[static_cast<std::size_t>(i * grid_size + j)]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i * grid_size + j)]; }
  double node(int i) const;
};

/// Rank-1 factorization Q ~ Z(phi) * P(eta) with the normalization
/// RMS(P) = 1/sqrt(2) and a positive fundamental cosine coefficient of P.
struct FactorPair {
  std::vector<double> z;
  std::vector<double> p;
  double residual = 0.0;
};

/// Nadaraya-Watson estimate of the phase velocity over the torus with the
/// wrapped kernel exp[kappa(cos x + cos y - 2)], minus the regression
/// frequency of phi. `rate` is the measured phase velocity at each sample.
CouplingSurface fit_coupling(const ProtophaseSeries& phi, const ProtophaseSeries& eta,
                             const TimeSeries& rate, double kappa = 200.0, int grid_size = 64);

/// Alternating least-squares refinement from P(eta) = cos(eta).
FactorPair factorize(const CouplingSurface& q, int k_steps = 30);

}  // namespace ihte
