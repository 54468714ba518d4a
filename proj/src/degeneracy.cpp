#include "spinchain/degeneracy.hpp"

#include <cmath>
#include <stdexcept>

namespace spinchain {

double min_gap(const RealVector& spectrum) {
  if (spectrum.size() < 2) throw std::invalid_argument("need at least two eigenvalues");
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 1; i < spectrum.size(); ++i)
    gap = std::min(gap, spectrum[i] - spectrum[i - 1]);
  return gap;
}

KramersReport kramers_check(const SampledHamiltonian& h, double tol) {
  KramersReport report;
  Matrix m = h.dense();
  RealVector w = diagonalize(m, false).values;

  report.paired = w.size() % 2 == 0;
  for (Eigen::Index i = 0; i + 1 < w.size(); i += 2) {
    double gap = w[i + 1] - w[i];
    report.max_pair_gap = std::max(report.max_pair_gap, gap);
    if (gap > tol) report.paired = false;
  }

  std::vector<int> all_y(h.spec.n, 2);
  Matrix s = PauliString::from_labels(all_y).to_dense();
  report.symmetry_residual = max_abs(s * m - m.conjugate() * s);
  return report;
}

CensusRow degeneracy_census(const EnsembleSpec& spec, int samples, double threshold) {
  CensusRow row;
  row.family = spec.family;
  row.n = spec.n;
  row.samples = samples;
  int nondeg = 0;
  for (int s = 0; s < samples; ++s) {
    RealVector w = sampled_eigenvalues(sample(spec, s));
    if (min_gap(w) > threshold) ++nondeg;
  }
  row.nondegenerate_fraction = static_cast<double>(nondeg) / samples;
  return row;
}

}  // namespace spinchain
