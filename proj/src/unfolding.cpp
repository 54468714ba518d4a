#include "spinchain/unfolding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinchain {

UnfoldingMap build_unfolding(const HistogramAccumulator& pooled) {
  if (pooled.total() == 0) throw std::invalid_argument("empty eigenvalue pool");
  UnfoldingMap map;
  map.spec = pooled.spec();
  map.p.resize(map.spec.bins);
  map.cum.resize(map.spec.bins);
  double inv = 1.0 / static_cast<double>(pooled.total());
  double running = 0.0;
  for (int j = 0; j < map.spec.bins; ++j) {
    map.cum[j] = running;
    map.p[j] = pooled.counts()[j] * inv;
    running += map.p[j];
  }
  return map;
}

UnfoldingMap build_unfolding(const std::vector<RealVector>& spectra, HistogramSpec spec) {
  HistogramAccumulator acc(spec);
  for (const RealVector& s : spectra) acc.add(s);
  return build_unfolding(acc);
}

std::vector<double> unfold(const UnfoldingMap& map, const RealVector& spectrum) {
  std::vector<double> out;
  out.reserve(spectrum.size());
  const double lo = map.spec.lo, hi = map.spec.hi;
  const double w = (hi - lo) / map.spec.bins;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    double v = spectrum[i];
    if (v < lo || v >= hi) continue;
    int j = std::min(static_cast<int>((v - lo) / w), map.spec.bins - 1);
    out.push_back(map.p[j] * (v - map.edge(j)) / w + map.cum[j]);
  }
  return out;
}

SpacingSample spacing_sample(const std::vector<std::vector<double>>& unfolded,
                             bool drop_zero_spacings, double zero_threshold) {
  SpacingSample out;
  out.zero_threshold = zero_threshold;
  std::vector<double> raw;
  for (const std::vector<double>& vec : unfolded) {
    if (vec.size() < 2) throw std::invalid_argument("unfolded vector shorter than 2");
    std::vector<double> sorted = vec;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i) raw.push_back(sorted[i] - sorted[i - 1]);
  }
  if (raw.empty()) throw std::invalid_argument("no spacings");
  KahanSum total;
  for (double s : raw) total.add(s);
  double mean = total.value() / static_cast<double>(raw.size());
  if (mean <= 0.0) throw std::invalid_argument("degenerate spacing pool");
  out.total_count = static_cast<std::int64_t>(raw.size());
  out.spacings.reserve(raw.size());
  for (double s : raw) {
    bool zero = s < zero_threshold;
    if (zero) ++out.zero_count;
    if (zero && drop_zero_spacings) continue;
    out.spacings.push_back(s / mean);
  }
  return out;
}

std::pair<double, double> surmise_moments(int beta, double area, double mean) {
  if (beta == 0) return {area, area * mean};
  double g1 = std::tgamma((beta + 1) / 2.0);
  double g2 = std::tgamma((beta + 2) / 2.0);
  double c = std::pow(g2 / (g1 * mean), 2.0);
  double C = 2.0 * area * std::pow(c, (beta + 1) / 2.0) / g1;
  double got_area = C * g1 / (2.0 * std::pow(c, (beta + 1) / 2.0));
  double got_mean_times_area = C * g2 / (2.0 * std::pow(c, (beta + 2) / 2.0));
  return {got_area, got_mean_times_area};
}

std::vector<double> surmise(int beta, const std::vector<double>& s_grid, double area,
                            double mean) {
  if (beta != 0 && beta != 1 && beta != 2 && beta != 4)
    throw std::invalid_argument("beta must be one of 0, 1, 2, 4");
  std::vector<double> out(s_grid.size());
  if (beta == 0) {
    // exponential law with the requested distribution mean
    for (size_t i = 0; i < s_grid.size(); ++i)
      out[i] = s_grid[i] < 0 ? 0.0 : area / mean * std::exp(-s_grid[i] / mean);
    return out;
  }
  // c from the ratio of Gamma moments, C from the requested area
  double g1 = std::tgamma((beta + 1) / 2.0);
  double g2 = std::tgamma((beta + 2) / 2.0);
  double c = std::pow(g2 / (g1 * mean), 2.0);
  double C = 2.0 * area * std::pow(c, (beta + 1) / 2.0) / g1;
  for (size_t i = 0; i < s_grid.size(); ++i) {
    double s = s_grid[i];
    out[i] = s < 0 ? 0.0 : C * std::pow(s, beta) * std::exp(-c * s * s);
  }
  return out;
}

Histogram spacing_histogram(const SpacingSample& s, HistogramSpec spec) {
  HistogramAccumulator acc(spec);
  for (double v : s.spacings) acc.add(v);
  // density against all spacings (zeros included), so dropped zero mass shows
  // up as depleted area rather than a renormalized curve
  Histogram h;
  h.spec = spec;
  h.total = s.total_count;
  double w = (spec.hi - spec.lo) / spec.bins;
  double norm = 1.0 / (static_cast<double>(s.total_count) * w);
  h.density.resize(spec.bins);
  std::int64_t captured = 0;
  for (int j = 0; j < spec.bins; ++j) {
    h.density[j] = acc.counts()[j] * norm;
    captured += acc.counts()[j];
  }
  h.captured_fraction = static_cast<double>(captured) / static_cast<double>(s.total_count);
  return h;
}

}  // namespace spinchain
