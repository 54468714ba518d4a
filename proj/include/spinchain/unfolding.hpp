#pragma once

#include <vector>

#include "spinchain/spectra.hpp"

namespace spinchain {

/// Piecewise-linear rescaling of a spectrum against the pooled average
/// density, so unfolded eigenvalues have roughly constant density on [0, 1].
struct UnfoldingMap {
  HistogramSpec spec;            // bin edges x_0 .. x_L on [lo, hi]
  std::vector<double> p;         // per-bin fraction of all pooled eigenvalues
  std::vector<double> cum;       // cum[j] = sum_{k<j} p_k

  double edge(int j) const { return spec.lo + j * (spec.hi - spec.lo) / spec.bins; }
};

UnfoldingMap build_unfolding(const std::vector<RealVector>& spectra,
                             HistogramSpec spec = {-3.0, 3.0, 240});
UnfoldingMap build_unfolding(const HistogramAccumulator& pooled);

/// lambda -> p_j (lambda - x_j) / binwidth + sum_{k<j} p_k; out-of-range
/// eigenvalues are dropped.  Monotone nondecreasing on [lo, hi).
std::vector<double> unfold(const UnfoldingMap& map, const RealVector& spectrum);

struct SpacingSample {
  std::vector<double> spacings;  // pooled, unit mean after the global rescale
  std::int64_t zero_count = 0;   // spacings below the degeneracy threshold
  std::int64_t total_count = 0;
  double zero_threshold = 0.0;   // on the unfolded scale, before the rescale
};

/// Consecutive differences of each (sorted) unfolded vector, pooled across
/// samples, then rescaled once to unit mean.  Exact degeneracies survive as
/// zero spacings; they are counted and optionally dropped from the output.
SpacingSample spacing_sample(const std::vector<std::vector<double>>& unfolded,
                             bool drop_zero_spacings = false,
                             double zero_threshold = 1e-9);

/// The closed-form spacing densities rho(s) = C s^beta e^{-c s^2} for
/// beta = 1, 2, 4 and e^{-s} scaling for beta = 0, with (C, c) fixed by the
/// requested area and mean.  The GSE comparison against Kramers-degenerate
/// spectra uses (area, mean) = (1/2, 2).
std::vector<double> surmise(int beta, const std::vector<double>& s_grid, double area = 1.0,
                            double mean = 1.0);

/// Quadrature check helper: (integral, first moment) of a surmise curve.
std::pair<double, double> surmise_moments(int beta, double area, double mean);

/// Histogram of spacings on [0, 3] with 120 bins (density normalized against
/// total_count, so removed zero spacings deplete the area).
Histogram spacing_histogram(const SpacingSample& s, HistogramSpec spec = {0.0, 3.0, 120});

}  // namespace spinchain
