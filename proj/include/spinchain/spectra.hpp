#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "spinchain/ensembles.hpp"
#include "spinchain/la.hpp"

namespace spinchain {

struct EigenSystem {
  RealVector values;  // ascending
  Matrix vectors;     // columns, empty unless requested
};

/// Full Hermitian eigendecomposition (LAPACK zheevd).  Throws if the input is
/// not Hermitian to 1e-10 or if the backend fails.
EigenSystem diagonalize(const Matrix& h, bool want_vectors);

/// Eigenvalues of a real symmetric matrix (LAPACK dsyevd).
RealVector eigenvalues_symmetric(const RealMatrix& h);

/// Even-length chains whose terms all have even Pauli weight commute with the
/// antiunitary S-conjugation, so they are unitarily equivalent to a real
/// symmetric matrix; that basis change is applied here.  Falls back to the
/// complex path otherwise.
RealVector sampled_eigenvalues(const SampledHamiltonian& h);

/// Conjugates H into the S-real basis.  Requires even n and even-weight terms.
RealMatrix realify(const Matrix& h, int n);

struct HistogramSpec {
  double lo = -3.0;
  double hi = 3.0;
  int bins = 240;
};

class HistogramAccumulator {
 public:
  explicit HistogramAccumulator(HistogramSpec spec);
  void add(double value);
  void add(const RealVector& spectrum);
  void merge(const HistogramAccumulator& other);

  const HistogramSpec& spec() const { return spec_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::int64_t total() const { return total_; }

 private:
  HistogramSpec spec_;
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;  // including out-of-range values
};

struct Histogram {
  HistogramSpec spec;
  std::vector<double> density;  // sums to captured_fraction after * binwidth
  double captured_fraction = 0.0;
  std::int64_t total = 0;

  double bin_center(int j) const;
};

/// Normalizes pooled counts; if symmetrize, bin values are averaged with their
/// mirror about zero (requires lo == -hi).
Histogram finalize_histogram(const HistogramAccumulator& acc, bool symmetrize);

/// L1 distance between a histogram and a reference density evaluated at the
/// bin centers, restricted to the histogram range.
double l1_distance(const Histogram& h, const std::vector<double>& reference_density);

/// (2^-n) Tr(H^m) evaluated from the spectrum as the mean of lambda^m.
double trace_moment(const RealVector& spectrum, int m);

struct CharacteristicCurve {
  std::vector<double> t;
  std::vector<Complex> values;
};

/// psi(t) = mean over eigenvalues of exp(i t lambda).
CharacteristicCurve characteristic_fn(const RealVector& spectrum, const std::vector<double>& t_grid);

/// Right-continuous empirical CDF error against the standard normal:
/// E_n(x) = |#{lambda <= x} / N - Phi(x)|.
double gaussian_cdf_error(const RealVector& spectrum, double x);

double standard_normal_cdf(double x);
double standard_normal_pdf(double x);

/// Scale factor C with (2^-n) Tr((CH)^2) = 1, from the coefficient sum of
/// squares.  Throws on the zero Hamiltonian.
double unit_variance_scale(const SampledHamiltonian& h);

struct BlockSplitResult {
  CharacteristicCurve psi;          // full-chain characteristic function
  CharacteristicCurve phi;          // product over decoupled blocks
  std::vector<double> bound;        // |t| * sqrt(sum of squared link coefficients)
  double link_sum_squares = 0.0;
};

/// Splits a ring chain with local terms into ceil(n/l) blocks by removing the
/// link bonds h_{(k-1)l}; phi is the product of per-block characteristic
/// functions and bound is the Cauchy-Schwarz link bound.
BlockSplitResult block_split_characteristic(const SampledHamiltonian& h, int block_len,
                                            const std::vector<double>& t_grid);

/// Exact finite-N GUE spectral density rescaled to unit variance, via the
/// normalized Hermite-function recursion.  Guarded to N <= 64.
std::vector<double> gue_reference_density(int N, const std::vector<double>& lambda_grid);

/// Unit-variance semicircle density.
std::vector<double> semicircle_density(const std::vector<double>& lambda_grid);

}  // namespace spinchain
