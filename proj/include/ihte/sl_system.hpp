#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "ihte/types.hpp"

namespace ihte {

/// Parameters of the forced Stuart-Landau oscillator
///   da/dt = (mu + i nu) a - (1 + i alpha) a |a|^2 + i eps P(t),
///   P(t) = cos(r omega t), plus optional white-noise forcing i xi(t)
/// with <xi(t) xi(t')> = sigma^2 delta(t - t').
struct SLParams {
  double mu = 8.0;      // limit-cycle stability; amplitude sqrt(mu)
  double alpha = 0.1;   // nonisochronicity
  double nu = 1.0;      // linear frequency
  double eps = 0.0;     // forcing amplitude
  double r = 1.0;       // forcing-to-base frequency ratio
  double sigma = 0.0;   // white-noise intensity

  double omega() const noexcept { return nu - mu * alpha; }
  void validate() const;
};

struct SLTrajectory {
  double t0 = 0.0;
  double dt = 0.01;
  std::vector<double> re_a;
  std::vector<double> im_a;
  std::vector<double> phi_true;  // arg a - alpha ln R, unwrapped
  std::vector<double> eta;       // r omega t

  std::size_t size() const noexcept { return re_a.size(); }
  double time(std::size_t i) const noexcept { return t0 + dt * static_cast<double>(i); }
};

enum class ObservableKind { X1, X2, X3 };

ObservableKind observable_from_string(const std::string& s);
const char* to_string(ObservableKind k) noexcept;

struct SimOptions {
  double duration = 0.0;
  double dt = 0.01;
  std::uint64_t seed = 0;  // consumed only when sigma > 0
  std::optional<std::complex<double>> initial;  // default: sqrt(mu), on the cycle
  double transient_periods = 20.0;  // integrated and discarded before recording
};

/// Fixed-step integration: classical RK4 for sigma = 0, explicit first-order
/// stochastic stepping (sqrt(dt) sigma N(0,1) increments on the imaginary
/// forcing channel) for sigma > 0. The recorded window starts after the
/// transient; the forcing phase is continuous across the transient.
SLTrajectory simulate(const SLParams& params, const SimOptions& opts);

/// Pointwise evaluation of the selected scalar observable:
///   X1 = Re a
///   X2 = 0.1 (Im a)^2 + 0.2 (Re a)^2 + 0.3 Im a + 0.4 Re a
///   X3 = X2 + 0.3 Re a Im a
TimeSeries observe(const SLTrajectory& traj, ObservableKind kind);

struct ReducedTrajectory {
  TimeSeries amplitude;
  ProtophaseSeries phase;
};

/// First-order-in-eps amplitude/phase model
///   dR/dt   = R (mu - R^2) + eps P(t) sin(phi)
///   dphi/dt = omega + eps mu^{-1/2} (cos phi - alpha sin phi) P(t)
/// integrated with RK4 from (R0, phi0). Deterministic only.
ReducedTrajectory simulate_reduced(const SLParams& params, double duration, double dt,
                                   double R0, double phi0);
ReducedTrajectory simulate_reduced(const SLParams& params, double duration, double dt);

/// Infinitesimal phase response curve Z(phi) = (cos phi - alpha sin phi) / sqrt(mu).
double iprc(double phi, const SLParams& params);

}  // namespace ihte
