#include "spinchain/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace spinchain {

EigenSystem diagonalize(const Matrix& h, bool want_vectors) {
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix must be square");
  if (!is_hermitian(h, 1e-10)) throw std::invalid_argument("matrix is not Hermitian");
  int n = static_cast<int>(h.rows());
  EigenSystem out;
  out.values.resize(n);
  Matrix work = h;
  int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'L', n,
                            work.data(), n,
                            out.values.data());
  if (info != 0) throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
  if (want_vectors) out.vectors = std::move(work);
  return out;
}

namespace {

// Eigenvalues-only path; the 2-stage reduction is faster from dim 4096 up.
RealVector eigenvalues_hermitian(Matrix work) {
  int n = static_cast<int>(work.rows());
  RealVector w(n);
  if (n >= 4096) {
    int info = LAPACKE_zheev_2stage(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, w.data());
    if (info != 0) throw std::runtime_error("zheev_2stage failed, info=" + std::to_string(info));
  } else {
    int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                              work.data(), n, w.data());
    if (info != 0) throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
  }
  return w;
}

}  // namespace

RealVector eigenvalues_symmetric(const RealMatrix& h) {
  int n = static_cast<int>(h.rows());
  RealMatrix work = h;
  RealVector w(n);
  int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, w.data());
  if (info != 0) throw std::runtime_error("dsyevd failed, info=" + std::to_string(info));
  return w;
}

RealMatrix realify(const Matrix& h, int n) {
  if (n % 2 != 0) throw std::invalid_argument("realify requires even n");
  const std::uint64_t dim = 1ULL << n;
  if (static_cast<std::uint64_t>(h.rows()) != dim) throw std::invalid_argument("dimension mismatch");
  // Basis of the antiunitary conjugation Theta = (prod_j s_j^(2)) K, paired by
  // bit complement: columns (|y> + phi_y |~y>)/sqrt2 and i(|y> - phi_y |~y>)/sqrt2
  // with phi_y = Re(i^n) (-1)^{s(y)}.
  const double phase_n = (n % 4 == 0) ? 1.0 : -1.0;
  std::vector<std::uint64_t> rep;
  rep.reserve(dim / 2);
  for (std::uint64_t y = 0; y < dim; ++y) {
    std::uint64_t yb = ~y & (dim - 1);
    if (y < yb) rep.push_back(y);
  }
  const double r = 1.0 / std::sqrt(2.0);
  // columns of W have two entries; compute HW then W^dagger (HW)
  Matrix hw(dim, dim);
  for (std::uint64_t c = 0; c < dim / 2; ++c) {
    std::uint64_t y = rep[c];
    std::uint64_t yb = ~y & (dim - 1);
    double phi = phase_n * ((std::popcount(y) % 2 == 0) ? 1.0 : -1.0);
    hw.col(2 * c) = r * (h.col(y) + phi * h.col(yb));
    hw.col(2 * c + 1) = Complex(0, r) * (h.col(y) - phi * h.col(yb));
  }
  RealMatrix out(dim, dim);
  for (std::uint64_t c = 0; c < dim / 2; ++c) {
    std::uint64_t y = rep[c];
    std::uint64_t yb = ~y & (dim - 1);
    double phi = phase_n * ((std::popcount(y) % 2 == 0) ? 1.0 : -1.0);
    // row 2c   = r (conj row y + phi conj row yb) of HW
    // row 2c+1 = -i r (conj row y - phi conj row yb)
    out.row(2 * c) = (r * (hw.row(y) + phi * hw.row(yb))).real();
    out.row(2 * c + 1) = (Complex(0, -r) * (hw.row(y) - phi * hw.row(yb))).real();
  }
  return out;
}

RealVector sampled_eigenvalues(const SampledHamiltonian& h) {
  if (h.spec.n % 2 == 0 && h.all_even_weight()) {
    return eigenvalues_symmetric(realify(h.dense(), h.spec.n));
  }
  return eigenvalues_hermitian(h.dense());
}

HistogramAccumulator::HistogramAccumulator(HistogramSpec spec) : spec_(spec) {
  if (spec_.bins < 1) throw std::invalid_argument("need at least one bin");
  if (spec_.lo >= spec_.hi) throw std::invalid_argument("empty histogram range");
  counts_.assign(spec_.bins, 0);
}

void HistogramAccumulator::add(double v) {
  ++total_;
  if (v < spec_.lo || v >= spec_.hi) return;
  int j = static_cast<int>((v - spec_.lo) / (spec_.hi - spec_.lo) * spec_.bins);
  j = std::min(j, spec_.bins - 1);
  ++counts_[j];
}

void HistogramAccumulator::add(const RealVector& spectrum) {
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) add(spectrum[i]);
}

void HistogramAccumulator::merge(const HistogramAccumulator& other) {
  if (other.spec_.bins != spec_.bins || other.spec_.lo != spec_.lo || other.spec_.hi != spec_.hi)
    throw std::invalid_argument("histogram spec mismatch");
  for (int j = 0; j < spec_.bins; ++j) counts_[j] += other.counts_[j];
  total_ += other.total_;
}

double Histogram::bin_center(int j) const {
  double w = (spec.hi - spec.lo) / spec.bins;
  return spec.lo + (j + 0.5) * w;
}

Histogram finalize_histogram(const HistogramAccumulator& acc, bool symmetrize) {
  const HistogramSpec& spec = acc.spec();
  if (acc.total() == 0) throw std::invalid_argument("empty histogram");
  if (symmetrize && std::abs(spec.lo + spec.hi) > 1e-12)
    throw std::invalid_argument("symmetrization needs a range centred on zero");
  Histogram h;
  h.spec = spec;
  h.total = acc.total();
  double w = (spec.hi - spec.lo) / spec.bins;
  double norm = 1.0 / (static_cast<double>(acc.total()) * w);
  h.density.resize(spec.bins);
  std::int64_t captured = 0;
  for (int j = 0; j < spec.bins; ++j) captured += acc.counts()[j];
  h.captured_fraction = static_cast<double>(captured) / static_cast<double>(acc.total());
  for (int j = 0; j < spec.bins; ++j) {
    if (symmetrize) {
      int m = spec.bins - 1 - j;
      h.density[j] = 0.5 * (acc.counts()[j] + acc.counts()[m]) * norm;
    } else {
      h.density[j] = acc.counts()[j] * norm;
    }
  }
  return h;
}

double l1_distance(const Histogram& h, const std::vector<double>& reference_density) {
  if (reference_density.size() != h.density.size())
    throw std::invalid_argument("reference grid mismatch");
  double w = (h.spec.hi - h.spec.lo) / h.spec.bins;
  KahanSum s;
  for (size_t j = 0; j < h.density.size(); ++j)
    s.add(std::abs(h.density[j] - reference_density[j]) * w);
  return s.value();
}

double trace_moment(const RealVector& spectrum, int m) {
  if (m < 1) throw std::invalid_argument("moment order must be >= 1");
  KahanSum s;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) s.add(std::pow(spectrum[i], m));
  return s.value() / static_cast<double>(spectrum.size());
}

CharacteristicCurve characteristic_fn(const RealVector& spectrum,
                                      const std::vector<double>& t_grid) {
  CharacteristicCurve out;
  out.t = t_grid;
  out.values.resize(t_grid.size());
  double inv = 1.0 / static_cast<double>(spectrum.size());
  for (size_t k = 0; k < t_grid.size(); ++k) {
    KahanSum re, im;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
      double a = t_grid[k] * spectrum[i];
      re.add(std::cos(a));
      im.add(std::sin(a));
    }
    out.values[k] = Complex(re.value() * inv, im.value() * inv);
  }
  return out;
}

double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double standard_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

double gaussian_cdf_error(const RealVector& spectrum, double x) {
  std::int64_t count = 0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i)
    if (spectrum[i] <= x) ++count;
  double ecdf = static_cast<double>(count) / static_cast<double>(spectrum.size());
  return std::abs(ecdf - standard_normal_cdf(x));
}

double unit_variance_scale(const SampledHamiltonian& h) {
  double ss = h.normalized_trace_h2();
  if (ss <= 0.0) throw std::invalid_argument("zero Hamiltonian cannot be rescaled");
  return 1.0 / std::sqrt(ss);
}

BlockSplitResult block_split_characteristic(const SampledHamiltonian& h, int block_len,
                                            const std::vector<double>& t_grid) {
  const int n = h.spec.n;
  if (block_len < 2 || block_len >= n) throw std::invalid_argument("block length out of range");
  const int K = (n + block_len - 1) / block_len;

  // h_j groups the terms of bond/local slot j (the j = n slot is h_0); block k
  // keeps h_{(k-1)l + 1 .. (k-1)l + l - 1} and the links are the h_{(k-1)l}.
  auto h_index = [n](const Term& t) { return t.site == n ? 0 : t.site; };
  auto is_link = [&](int hj) { return hj % block_len == 0 && hj / block_len < K; };

  BlockSplitResult res;
  KahanSum link_ss;
  std::vector<std::vector<size_t>> block_terms(K);
  for (size_t i = 0; i < h.terms.size(); ++i) {
    int hj = h_index(h.terms[i]);
    if (is_link(hj)) {
      link_ss.add(h.coefficients[i] * h.coefficients[i]);
    } else {
      int k = hj / block_len;  // h_j with j in ((k)l, (k+1)l) belongs to block k
      if (k >= K) throw std::runtime_error("block index overflow");
      block_terms[k].push_back(i);
    }
  }
  res.link_sum_squares = link_ss.value();

  // psi from the full spectrum
  res.psi = characteristic_fn(sampled_eigenvalues(h), t_grid);

  // phi as the product over per-block characteristic functions, each block
  // diagonalized on its own qubits
  res.phi.t = t_grid;
  res.phi.values.assign(t_grid.size(), Complex(1.0, 0.0));
  for (int k = 0; k < K; ++k) {
    int lo_site = k * block_len + 1;
    int hi_site = std::min((k + 1) * block_len, n);
    int m = hi_site - lo_site + 1;
    std::uint64_t dim = 1ULL << m;
    Matrix bm = Matrix::Zero(dim, dim);
    for (size_t idx : block_terms[k]) {
      const Term& t = h.terms[idx];
      // relabel sites into the block
      std::vector<int> labels(m, 0);
      for (int site = lo_site; site <= hi_site; ++site)
        labels[site - lo_site] = t.op.label(site);
      PauliString local = PauliString::from_labels(labels);
      for (std::uint64_t y = 0; y < dim; ++y) {
        auto act = local.apply(y);
        bm(act.index, y) += h.coefficients[idx] * act.coeff;
      }
    }
    CharacteristicCurve blk = characteristic_fn(diagonalize(bm, false).values, t_grid);
    for (size_t q = 0; q < t_grid.size(); ++q) res.phi.values[q] *= blk.values[q];
  }

  res.bound.resize(t_grid.size());
  for (size_t q = 0; q < t_grid.size(); ++q)
    res.bound[q] = std::abs(t_grid[q]) * std::sqrt(res.link_sum_squares);
  return res;
}

std::vector<double> gue_reference_density(int N, const std::vector<double>& lambda_grid) {
  if (N < 1 || N > 64) throw std::invalid_argument("GUE reference limited to 1 <= N <= 64");
  std::vector<double> out(lambda_grid.size());
  const double scale = std::sqrt(N / 2.0);
  for (size_t i = 0; i < lambda_grid.size(); ++i) {
    double x = scale * lambda_grid[i];
    // normalized Hermite functions phi_j, weight e^{-x^2}
    double prev = 0.0;
    double cur = std::exp(-0.5 * x * x) / std::pow(M_PI, 0.25);
    double acc = cur * cur;
    for (int j = 0; j < N - 1; ++j) {
      double next = x * std::sqrt(2.0 / (j + 1)) * cur - std::sqrt(j / (j + 1.0)) * prev;
      prev = cur;
      cur = next;
      acc += cur * cur;
    }
    out[i] = scale * acc / N;
  }
  return out;
}

std::vector<double> semicircle_density(const std::vector<double>& lambda_grid) {
  std::vector<double> out(lambda_grid.size(), 0.0);
  for (size_t i = 0; i < lambda_grid.size(); ++i) {
    double u = lambda_grid[i];
    if (std::abs(u) <= 2.0) out[i] = std::sqrt(4.0 - u * u) / (2.0 * M_PI);
  }
  return out;
}

}  // namespace spinchain
