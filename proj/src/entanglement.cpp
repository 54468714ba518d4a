#include "spinchain/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "spinchain/degeneracy.hpp"

namespace spinchain {

Matrix partial_trace(const Vector& state, int keep, int n) {
  if (keep < 1 || keep >= n) throw std::invalid_argument("subsystem size out of range");
  if (state.size() != static_cast<Eigen::Index>(1ULL << n))
    throw std::invalid_argument("state dimension mismatch");
  if (std::abs(state.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("state is not normalized");
  const std::uint64_t da = 1ULL << keep;
  const std::uint64_t db = 1ULL << (n - keep);
  Matrix rho = Matrix::Zero(da, da);
  // psi_{a,c} = state[a * db + c] with qubit 1 the most significant bit
  for (std::uint64_t a = 0; a < da; ++a)
    for (std::uint64_t b = 0; b <= a; ++b) {
      Complex acc = 0.0;
      for (std::uint64_t c = 0; c < db; ++c)
        acc += state[a * db + c] * std::conj(state[b * db + c]);
      rho(a, b) = acc;
      rho(b, a) = std::conj(acc);
    }
  return rho;
}

double purity(const Matrix& rho) { return rho.squaredNorm(); }

double linear_entropy(const Matrix& rho) { return 1.0 - purity(rho); }

TranslationOp::TranslationOp(int n) : n_(n) {
  if (n < 2 || n > 62) throw std::invalid_argument("chain length out of range");
}

std::uint64_t TranslationOp::image(std::uint64_t y) const {
  return (y >> 1) | ((y & 1ULL) << (n_ - 1));
}

Vector TranslationOp::apply(const Vector& state) const {
  Vector out(state.size());
  for (std::uint64_t y = 0; y < static_cast<std::uint64_t>(state.size()); ++y)
    out[image(y)] = state[y];
  return out;
}

Matrix TranslationOp::dense() const {
  std::uint64_t dim = 1ULL << n_;
  Matrix t = Matrix::Zero(dim, dim);
  for (std::uint64_t y = 0; y < dim; ++y) t(image(y), y) = 1.0;
  return t;
}

std::vector<double> eigenstate_purities(const EigenSystem& es, int l, int n) {
  std::vector<double> out(es.vectors.cols());
  for (Eigen::Index k = 0; k < es.vectors.cols(); ++k)
    out[k] = purity(partial_trace(es.vectors.col(k), l, n));
  return out;
}

SingleQubitReport check_single_qubit_theorem(const SampledHamiltonian& h,
                                             double degeneracy_threshold) {
  if (h.has_local_terms())
    throw std::invalid_argument("theorem hypothesis requires a chain without local terms");
  SingleQubitReport report;
  EigenSystem es = diagonalize(h.dense(), true);
  report.min_gap = min_gap(es.values);
  if (report.min_gap <= degeneracy_threshold) {
    report.applicable = false;
    return report;
  }
  report.applicable = true;
  Matrix half = 0.5 * Matrix::Identity(2, 2);
  for (Eigen::Index k = 0; k < es.vectors.cols(); ++k) {
    Matrix rho = partial_trace(es.vectors.col(k), 1, h.spec.n);
    report.max_deviation = std::max(report.max_deviation, max_abs(rho - half));
  }
  return report;
}

BlockPurityReport check_block_purity_bound(const SampledHamiltonian& h, int l,
                                           double degeneracy_threshold, double epsilon) {
  const int n = h.spec.n;
  if (2 * l >= n) throw std::invalid_argument("requires 2l < n");
  BlockPurityReport report;
  report.lower = std::pow(2.0, -l);
  report.upper = report.lower + std::pow(2.0, l) / n;
  report.epsilon = epsilon;
  report.proportion_bound = std::pow(2.0, l) / (n * epsilon);

  EigenSystem es = diagonalize(h.dense(), true);
  report.min_gap = min_gap(es.values);
  // a simple spectrum forces every eigenvector to be a T eigenstate, which is
  // what the bound's proof uses
  if (report.min_gap <= degeneracy_threshold) {
    report.applicable = false;
    return report;
  }
  report.applicable = true;
  std::vector<double> purities = eigenstate_purities(es, l, n);
  KahanSum sum;
  std::int64_t above = 0;
  for (double p : purities) {
    sum.add(p);
    if (p > report.lower + epsilon) ++above;
  }
  report.average_purity = sum.value() / static_cast<double>(purities.size());
  report.proportion_above = static_cast<double>(above) / static_cast<double>(purities.size());
  report.within_bounds = report.average_purity >= report.lower - 1e-10 &&
                         report.average_purity <= report.upper + 1e-10;
  return report;
}

}  // namespace spinchain
