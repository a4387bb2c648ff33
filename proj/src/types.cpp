#include "ihte/types.hpp"

#include <cmath>

namespace ihte {

const char* to_string(errc c) noexcept {
  switch (c) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::degenerate_initial_condition: return "degenerate-initial-condition";
    case errc::monotonicity_violation: return "monotonicity-violation";
    case errc::insufficient_data: return "insufficient-data";
    case errc::insufficient_features: return "insufficient-features";
    case errc::internal_invariant: return "internal-invariant-violation";
    case errc::numerical_failure: return "numerical-failure";
    case errc::undersampled_region: return "undersampled-region";
    case errc::degenerate_factorization: return "degenerate-factorization";
    case errc::normalization_degenerate: return "normalization-degenerate";
    case errc::config: return "config-error";
    case errc::io: return "io-error";
  }
  return "unknown-error";
}

void fail(errc code, const std::string& msg) { throw Error(code, msg); }

std::vector<double> TimeSeries::times() const {
  std::vector<double> t(values.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = time(i);
  return t;
}

std::vector<double> ProtophaseSeries::times() const {
  std::vector<double> t(values.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = time(i);
  return t;
}

bool strictly_increasing(const std::vector<double>& v) noexcept {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  return true;
}

void validate_gridded(const GriddedSignal& sig, std::size_t min_samples) {
  if (sig.grid.size() != sig.values.size())
    fail(errc::invalid_argument, "grid and values lengths differ");
  if (sig.size() < min_samples)
    fail(errc::insufficient_data,
         "need at least " + std::to_string(min_samples) + " samples, got " +
             std::to_string(sig.size()));
  if (!strictly_increasing(sig.grid))
    fail(errc::monotonicity_violation, "grid is not strictly increasing");
}

void require_all_finite(const std::vector<double>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i]))
      fail(errc::numerical_failure,
           std::string(what) + " contains a non-finite value at index " + std::to_string(i));
}

}  // namespace ihte
