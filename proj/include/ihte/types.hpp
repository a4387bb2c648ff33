#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ihte {

// Error categories used across the library. The CLI maps them to exit codes.
enum class errc {
  invalid_argument,
  degenerate_initial_condition,
  monotonicity_violation,
  insufficient_data,
  insufficient_features,
  internal_invariant,
  numerical_failure,
  undersampled_region,
  degenerate_factorization,
  normalization_degenerate,
  config,
  io,
};

const char* to_string(errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

/// Uniformly sampled scalar signal.
struct TimeSeries {
  double t0 = 0.0;
  double dt = 1.0;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
  double time(std::size_t i) const noexcept { return t0 + dt * static_cast<double>(i); }
  double span() const noexcept {
    return values.empty() ? 0.0 : dt * static_cast<double>(values.size() - 1);
  }
  std::vector<double> times() const;
};

/// Unwrapped phase-like variable on a uniform time grid. Strictly increasing
/// for every series produced by the pipeline; the values double as a
/// non-uniform integration grid for the next transform.
struct ProtophaseSeries {
  double t0 = 0.0;
  double dt = 1.0;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
  double time(std::size_t i) const noexcept { return t0 + dt * static_cast<double>(i); }
  double span() const noexcept {
    return values.empty() ? 0.0 : dt * static_cast<double>(values.size() - 1);
  }
  std::vector<double> times() const;
};

/// Samples over a strictly increasing, possibly non-uniform grid.
struct GriddedSignal {
  std::vector<double> grid;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
};

/// Paired (x, y) samples over a common monotone grid; y is the Hilbert
/// partner of x.
struct Embedding {
  std::vector<double> grid;
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const noexcept { return x.size(); }
};

/// Sample positions attributed to zero (mod 2*pi) protophase.
struct FeatureSet {
  std::vector<std::size_t> indices;
  std::vector<double> times;

  std::size_t size() const noexcept { return indices.size(); }
};

bool strictly_increasing(const std::vector<double>& v) noexcept;

/// Throws unless the signal has a strictly increasing grid, matching lengths
/// and at least `min_samples` samples.
void validate_gridded(const GriddedSignal& sig, std::size_t min_samples = 64);

void require_all_finite(const std::vector<double>& v, const char* what);

}  // namespace ihte
