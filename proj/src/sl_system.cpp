#include "ihte/sl_system.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace ihte {

namespace {

using cplx = std::complex<double>;
constexpr double two_pi = 2.0 * std::numbers::pi;

cplx drift(const SLParams& p, const cplx& a, double t) {
  const double forcing = p.eps == 0.0 ? 0.0 : p.eps * std::cos(p.r * p.omega() * t);
  return cplx(p.mu, p.nu) * a - cplx(1.0, p.alpha) * a * std::norm(a) + cplx(0.0, forcing);
}

cplx rk4_step(const SLParams& p, const cplx& a, double t, double dt) {
  const cplx k1 = drift(p, a, t);
  const cplx k2 = drift(p, a + 0.5 * dt * k1, t + 0.5 * dt);
  const cplx k3 = drift(p, a + 0.5 * dt * k2, t + 0.5 * dt);
  const cplx k4 = drift(p, a + dt * k3, t + dt);
  return a + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Platform-independent standard normals from the mt19937_64 bit stream.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(two_pi * u2);
    have_spare_ = true;
    return mag * std::cos(two_pi * u2);
  }

 private:
  double uniform01() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;  // [0, 1)
  }

  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

double phase_of(const cplx& a, double alpha) {
  return std::arg(a) - alpha * std::log(std::abs(a));
}

double unwrap_step(double prev_unwrapped, double prev_wrapped, double wrapped) {
  double delta = wrapped - prev_wrapped;
  delta -= two_pi * std::round(delta / two_pi);
  return prev_unwrapped + delta;
}

}  // namespace

void SLParams::validate() const {
  if (!(mu > 0.0)) fail(errc::invalid_argument, "sl: mu must be positive");
  if (eps < 0.0) fail(errc::invalid_argument, "sl: eps must be non-negative");
  if (sigma < 0.0) fail(errc::invalid_argument, "sl: sigma must be non-negative");
  if (!(omega() > 0.0))
    fail(errc::invalid_argument, "sl: base frequency omega = nu - mu*alpha must be positive");
}

ObservableKind observable_from_string(const std::string& s) {
  if (s == "X1" || s == "x1") return ObservableKind::X1;
  if (s == "X2" || s == "x2") return ObservableKind::X2;
  if (s == "X3" || s == "x3") return ObservableKind::X3;
  fail(errc::config, "unknown observable '" + s + "' (expected X1, X2 or X3)");
}

const char* to_string(ObservableKind k) noexcept {
  switch (k) {
    case ObservableKind::X1: return "X1";
    case ObservableKind::X2: return "X2";
    case ObservableKind::X3: return "X3";
  }
  return "?";
}

SLTrajectory simulate(const SLParams& params, const SimOptions& opts) {
  params.validate();
  if (!(opts.dt > 0.0)) fail(errc::invalid_argument, "sl: dt must be positive");
  if (!(opts.duration >= 100.0 * opts.dt))
    fail(errc::invalid_argument, "sl: duration must cover at least 100 steps");
  if (opts.transient_periods < 0.0)
    fail(errc::invalid_argument, "sl: transient_periods must be non-negative");

  cplx a = opts.initial.value_or(cplx(std::sqrt(params.mu), 0.0));
  if (a == cplx(0.0, 0.0))
    fail(errc::degenerate_initial_condition, "sl: initial state at the origin has no phase");

  const double w = params.omega();
  const double period = two_pi / w;
  const long long n_trans =
      static_cast<long long>(std::llround(opts.transient_periods * period / opts.dt));
  const long long n_rec = static_cast<long long>(std::llround(opts.duration / opts.dt)) + 1;

  const bool noisy = params.sigma > 0.0;
  NormalSource normals(opts.seed);
  const double noise_scale = params.sigma * std::sqrt(opts.dt);

  auto advance = [&](const cplx& state, double t) -> cplx {
    if (!noisy) return rk4_step(params, state, t, opts.dt);
    return state + opts.dt * drift(params, state, t) + cplx(0.0, noise_scale * normals.next());
  };

  // Transient: forcing phase stays continuous by running time from -n_trans*dt.
  double t = -static_cast<double>(n_trans) * opts.dt;
  for (long long i = 0; i < n_trans; ++i) {
    a = advance(a, t);
    t = -static_cast<double>(n_trans - 1 - i) * opts.dt;
  }

  SLTrajectory traj;
  traj.t0 = 0.0;
  traj.dt = opts.dt;
  traj.re_a.reserve(static_cast<std::size_t>(n_rec));
  traj.im_a.reserve(static_cast<std::size_t>(n_rec));
  traj.phi_true.reserve(static_cast<std::size_t>(n_rec));
  traj.eta.reserve(static_cast<std::size_t>(n_rec));

  double wrapped = phase_of(a, params.alpha);
  double phi = wrapped;  // accumulated continuously, anchored at recording start
  for (long long i = 0; i < n_rec; ++i) {
    const double ti = static_cast<double>(i) * opts.dt;
    if (i > 0) {
      a = advance(a, ti - opts.dt);
      const double w_now = phase_of(a, params.alpha);
      phi = unwrap_step(phi, wrapped, w_now);
      wrapped = w_now;
    }
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      fail(errc::numerical_failure, "sl: trajectory diverged at t = " + std::to_string(ti));
    traj.re_a.push_back(a.real());
    traj.im_a.push_back(a.imag());
    traj.phi_true.push_back(phi);
    traj.eta.push_back(params.r * w * ti);
  }
  return traj;
}

TimeSeries observe(const SLTrajectory& traj, ObservableKind kind) {
  if (traj.size() == 0) fail(errc::invalid_argument, "observe: empty trajectory");
  TimeSeries out;
  out.t0 = traj.t0;
  out.dt = traj.dt;
  out.values.resize(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double re = traj.re_a[i];
    const double im = traj.im_a[i];
    switch (kind) {
      case ObservableKind::X1:
        out.values[i] = re;
        break;
      case ObservableKind::X2:
        out.values[i] = 0.1 * im * im + 0.2 * re * re + 0.3 * im + 0.4 * re;
        break;
      case ObservableKind::X3:
        out.values[i] = 0.1 * im * im + 0.2 * re * re + 0.3 * im + 0.4 * re + 0.3 * re * im;
        break;
    }
  }
  return out;
}

ReducedTrajectory simulate_reduced(const SLParams& params, double duration, double dt,
                                   double R0, double phi0) {
  params.validate();
  if (params.sigma != 0.0)
    fail(errc::invalid_argument, "reduced model: sigma must be zero");
  if (!(dt > 0.0)) fail(errc::invalid_argument, "reduced model: dt must be positive");
  if (!(duration >= 100.0 * dt))
    fail(errc::invalid_argument, "reduced model: duration must cover at least 100 steps");

  const double w = params.omega();
  const double inv_sqrt_mu = 1.0 / std::sqrt(params.mu);
  auto rhs = [&](double R, double phi, double t, double& dR, double& dphi) {
    const double P = params.eps == 0.0 ? 0.0 : std::cos(params.r * w * t);
    dR = R * (params.mu - R * R) + params.eps * P * std::sin(phi);
    dphi = w + params.eps * inv_sqrt_mu * (std::cos(phi) - params.alpha * std::sin(phi)) * P;
  };

  const long long n = static_cast<long long>(std::llround(duration / dt)) + 1;
  ReducedTrajectory out;
  out.amplitude.t0 = 0.0;
  out.amplitude.dt = dt;
  out.phase.t0 = 0.0;
  out.phase.dt = dt;
  out.amplitude.values.reserve(static_cast<std::size_t>(n));
  out.phase.values.reserve(static_cast<std::size_t>(n));

  double R = R0, phi = phi0;
  for (long long i = 0; i < n; ++i) {
    if (i > 0) {
      const double t = static_cast<double>(i - 1) * dt;
      double k1R, k1p, k2R, k2p, k3R, k3p, k4R, k4p;
      rhs(R, phi, t, k1R, k1p);
      rhs(R + 0.5 * dt * k1R, phi + 0.5 * dt * k1p, t + 0.5 * dt, k2R, k2p);
      rhs(R + 0.5 * dt * k2R, phi + 0.5 * dt * k2p, t + 0.5 * dt, k3R, k3p);
      rhs(R + dt * k3R, phi + dt * k3p, t + dt, k4R, k4p);
      R += (dt / 6.0) * (k1R + 2.0 * k2R + 2.0 * k3R + k4R);
      phi += (dt / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    }
    out.amplitude.values.push_back(R);
    out.phase.values.push_back(phi);
  }
  return out;
}

ReducedTrajectory simulate_reduced(const SLParams& params, double duration, double dt) {
  return simulate_reduced(params, duration, dt, std::sqrt(params.mu), 0.0);
}

double iprc(double phi, const SLParams& params) {
  if (!(params.mu > 0.0)) fail(errc::invalid_argument, "iprc: mu must be positive");
  return (std::cos(phi) - params.alpha * std::sin(phi)) / std::sqrt(params.mu);
}

}  // namespace ihte
