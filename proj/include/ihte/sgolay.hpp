#pragma once

#include <vector>

#include "ihte/types.hpp"

namespace ihte {

/// SG[order, window, repeats]: least-squares polynomial filter of the given
/// order over an odd window, applied `repeats` times.
struct SGSpec {
  int order = 12;
  int window = 25;
  int repeats = 4;

  void validate() const;
};

/// Smoothing: per-point polynomial fit evaluated at the point, `repeats`
/// passes. Near the edges the same-order polynomial is fitted over the
/// leading/trailing full window and evaluated off-center.
TimeSeries sg_smooth(const TimeSeries& sig, const SGSpec& spec);

/// First derivative of the fitted polynomial, divided by dt. `repeats`
/// smoothing passes are applied first, then a single differentiation pass.
TimeSeries sg_derivative(const TimeSeries& sig, const SGSpec& spec);

namespace detail {
/// Convolution weights for evaluation offset t in [-m, m], derivative order
/// s, window 2m+1, polynomial order n. weights[t+m][i+m] multiplies the
/// sample at offset i from the window center.
std::vector<std::vector<double>> sg_weights(int m, int order, int s);
}  // namespace detail

}  // namespace ihte
