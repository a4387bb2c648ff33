#pragma once

#include "ihte/types.hpp"

namespace ihte {

/// Cumulative trajectory length of the (x, y) curve by chord summation.
/// L[0] = 0; repeated consecutive points contribute zero-length segments.
GriddedSignal arc_length(const Embedding& emb);

/// Dominant local maxima: candidates above the given quantile of the value
/// distribution, thinned so that no two survivors lie closer than
/// refractory * (median candidate spacing). Larger maxima win ties, which
/// picks one feature per fundamental period for multi-maxima waveforms.
FeatureSet detect_features(const GriddedSignal& sig, double quantile = 0.75,
                           double refractory = 0.5);

enum class ProtophaseInterp { monotone_cubic, linear };

/// Protophase from arc length: monotone cubic spline (or the piecewise
/// linear map) through the knots (L(t_j), 2*pi*j), evaluated at every
/// sample. Outside the knot range the adjacent knot interval's secant slope
/// extrapolates linearly.
ProtophaseSeries protophase_from_length(const GriddedSignal& length, const FeatureSet& feats,
                                        double t0, double dt,
                                        ProtophaseInterp interp = ProtophaseInterp::monotone_cubic);

}  // namespace ihte
