#include "spinchain/free_fermion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace spinchain {

bool is_odd_prime(int n) {
  if (n < 3 || n % 2 == 0) return false;
  for (int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<Matrix> jw_dense_operators(int n, int budget) {
  if (n > budget) throw std::invalid_argument("dense Fermi operators exceed memory budget");
  std::vector<Matrix> ops;
  ops.reserve(n);
  const std::uint64_t dim = 1ULL << n;
  for (int j = 1; j <= n; ++j) {
    Matrix a = Matrix::Zero(dim, dim);
    const std::uint64_t bit = 1ULL << (n - j);
    for (std::uint64_t y = 0; y < dim; ++y) {
      if (!(y & bit)) continue;  // a_j lowers site j: needs x_j = 1
      int string_sign = std::popcount(y >> (n - j + 1)) & 1;
      a(y ^ bit, y) = string_sign ? -1.0 : 1.0;
    }
    ops.push_back(std::move(a));
  }
  return ops;
}

namespace {

// Accumulates the symmetric-ordered coefficient matrix; const_check must end
// at zero for traceless inputs.
struct FormBuilder {
  int n;
  Matrix m;
  double const_check = 0.0;

  explicit FormBuilder(int n_) : n(n_), m(Matrix::Zero(2 * n_, 2 * n_)) {}

  void add_ad_a(int p, int q, Complex c) {  // c * a_p^+ a_q
    m(p, q) += 0.5 * c;
    m(n + q, n + p) -= 0.5 * c;
    if (p == q) const_check += 0.5 * c.real();
  }
  void add_a_ad(int p, int q, Complex c) {  // c * a_p a_q^+
    m(n + p, n + q) += 0.5 * c;
    m(q, p) -= 0.5 * c;
    if (p == q) const_check += 0.5 * c.real();
  }
  void add_a_a(int p, int q, Complex c) {  // c * a_p a_q, p != q
    m(n + p, q) += 0.5 * c;
    m(n + q, p) -= 0.5 * c;
  }
  void add_ad_ad(int p, int q, Complex c) {  // c * a_p^+ a_q^+, p != q
    m(p, n + q) += 0.5 * c;
    m(q, n + p) -= 0.5 * c;
  }

  // c * (a_p + sp a_p^+)(a_q + sq a_q^+) with signs sp, sq in {-1, +1}.
  void add_bilinear(int p, int q, double sp, double sq, Complex c) {
    add_a_a(p, q, c);
    add_a_ad(p, q, c * sq);
    add_ad_a(p, q, c * sp);
    add_ad_ad(p, q, c * sp * sq);
  }
};

}  // namespace

QuadraticForm assemble_quadratic_form(const SampledHamiltonian& h, Boundary boundary) {
  const int n = h.spec.n;
  FormBuilder fb(n);
  for (size_t i = 0; i < h.terms.size(); ++i) {
    const Term& t = h.terms[i];
    double alpha = h.coefficients[i];
    if (alpha == 0.0) continue;
    if (t.b == 0) {
      if (t.a != 3) throw std::invalid_argument("unsupported local term (only s^(3))");
      // s_j^(3) = a_j a_j^+ - a_j^+ a_j
      int p = t.site - 1;
      fb.add_a_ad(p, p, alpha);
      fb.add_ad_a(p, p, -alpha);
      continue;
    }
    if (t.a < 1 || t.a > 2 || t.b < 1 || t.b > 2)
      throw std::invalid_argument("unsupported bond term (only XX/XY/YX/YY)");
    bool ring_bond = t.site == n;
    double coeff = alpha;
    if (ring_bond) {
      if (boundary == Boundary::Open)
        throw std::invalid_argument("ring bond present; choose an eta sector");
      // s_n^(a) s_1^(b) = -eta * F_ab(n, 1)
      coeff *= (boundary == Boundary::SectorMinus) ? 1.0 : -1.0;
    }
    int p = t.site - 1;
    int q = t.site % n;  // site + 1 cyclically, zero-based
    // F_11 = -(a_p - a_p^+)(a_q + a_q^+)   F_12 = i (a_p - a_p^+)(a_q - a_q^+)
    // F_21 = i (a_p + a_p^+)(a_q + a_q^+)  F_22 = (a_p + a_p^+)(a_q - a_q^+)
    if (t.a == 1 && t.b == 1) fb.add_bilinear(p, q, -1.0, +1.0, -coeff);
    if (t.a == 1 && t.b == 2) fb.add_bilinear(p, q, -1.0, -1.0, Complex(0, 1) * coeff);
    if (t.a == 2 && t.b == 1) fb.add_bilinear(p, q, +1.0, +1.0, Complex(0, 1) * coeff);
    if (t.a == 2 && t.b == 2) fb.add_bilinear(p, q, +1.0, -1.0, coeff);
  }
  if (std::abs(fb.const_check) > 1e-12)
    throw std::runtime_error("unexpected constant offset in quadratic form");
  if (!is_hermitian(fb.m, 1e-12))
    throw std::runtime_error("assembled quadratic form is not Hermitian");
  QuadraticForm form;
  form.n = n;
  form.m = std::move(fb.m);
  return form;
}

namespace {

// Antiunitary partner X conj(v) under the half-swap X.
Vector particle_hole_partner(const Vector& v) {
  const Eigen::Index n = v.size() / 2;
  Vector out(v.size());
  out.head(n) = v.tail(n).conjugate();
  out.tail(n) = v.head(n).conjugate();
  return out;
}

void fix_phase(Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-8) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      return;
    }
  }
}

}  // namespace

BogoliubovModes bogoliubov_diagonalize(const QuadraticForm& form) {
  const int n = form.n;
  EigenSystem es = diagonalize(form.m, true);
  const double scale = std::max(1.0, es.values.cwiseAbs().maxCoeff());
  const double zero_tol = 1e-10 * scale;

  BogoliubovModes modes;
  modes.n = n;
  modes.mu.resize(2 * n);
  modes.transform.resize(2 * n, 2 * n);

  std::vector<Vector> rows;
  rows.reserve(n);
  std::vector<double> mus;
  // strictly positive eigenvalues, descending
  for (int i = 2 * n - 1; i >= 0; --i) {
    if (es.values[i] <= zero_tol) break;
    Vector v = es.vectors.col(i);
    fix_phase(v);
    rows.push_back(v);
    mus.push_back(es.values[i]);
  }
  // zero modes come in theta-invariant pairs; build a theta-real basis and
  // take w = (e1 + i e2)/sqrt(2) per pair
  int deficit = n - static_cast<int>(rows.size());
  if (deficit > 0) {
    std::vector<Vector> kernel;
    for (int i = 0; i < 2 * n; ++i)
      if (std::abs(es.values[i]) <= zero_tol) kernel.push_back(es.vectors.col(i));
    if (static_cast<int>(kernel.size()) != 2 * deficit)
      throw std::runtime_error("unpaired zero modes in quadratic form");
    std::vector<Vector> real_basis;
    for (const Vector& v : kernel) {
      Vector sym = v + particle_hole_partner(v);
      Vector asym = Complex(0, 1) * (v - particle_hole_partner(v));
      for (Vector cand : {sym, asym}) {
        for (const Vector& e : real_basis) cand -= e.dot(cand).real() * e;
        double norm = cand.norm();
        if (norm > 1e-6 && static_cast<int>(real_basis.size()) < 2 * deficit)
          real_basis.push_back(cand / norm);
      }
      if (static_cast<int>(real_basis.size()) == 2 * deficit) break;
    }
    if (static_cast<int>(real_basis.size()) != 2 * deficit)
      throw std::runtime_error("failed to pair zero modes");
    for (int k = 0; k < deficit; ++k) {
      Vector w = (real_basis[2 * k] + Complex(0, 1) * real_basis[2 * k + 1]) / std::sqrt(2.0);
      rows.push_back(w);
      mus.push_back(0.0);
    }
  }

  for (int j = 0; j < n; ++j) {
    modes.mu[j] = mus[j];
    modes.mu[n + j] = -mus[j];
    for (int k = 0; k < 2 * n; ++k) {
      modes.transform(j, k) = std::conj(rows[j][k]);
      modes.transform(n + j, k) = rows[j][(k + n) % (2 * n)];
    }
  }

  // invariants: unitary with the [[U,V],[conj V, conj U]] structure and a
  // diagonal transported form
  Matrix tt = modes.transform * modes.transform.adjoint();
  if (max_abs(tt - Matrix::Identity(2 * n, 2 * n)) > 1e-9)
    throw std::runtime_error("Bogoliubov transform is not unitary");
  Matrix d = modes.transform * form.m * modes.transform.adjoint();
  for (int j = 0; j < 2 * n; ++j) d(j, j) -= modes.mu[j];
  if (max_abs(d) > 1e-8 * scale)
    throw std::runtime_error("failed to achieve block structure within tolerance");
  return modes;
}

namespace {

void check_reconstruct_budget(int n, int max_n) {
  if (n > max_n || n > 26)
    throw std::invalid_argument("refusing to materialize more than 2^" +
                                std::to_string(std::min(max_n, 26)) + " eigenvalues");
}

RealVector subset_sums_sorted(double base, const std::vector<double>& deltas) {
  std::vector<double> values{base};
  values.reserve(1ULL << deltas.size());
  for (double d : deltas) {
    size_t count = values.size();
    for (size_t i = 0; i < count; ++i) values.push_back(values[i] + d);
  }
  RealVector out(values.size());
  std::copy(values.begin(), values.end(), out.begin());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RealVector reconstruct_spectrum(const BogoliubovModes& modes, int max_n) {
  check_reconstruct_budget(modes.n, max_n);
  const int n = modes.n;
  double base = 0.0;
  std::vector<double> deltas(n);
  for (int j = 0; j < n; ++j) {
    base += modes.mu[n + j];
    deltas[j] = modes.mu[j] - modes.mu[n + j];
  }
  return subset_sums_sorted(base, deltas);
}

ParitySplitSpectrum reconstruct_spectrum_by_parity(const BogoliubovModes& modes, int max_n) {
  check_reconstruct_budget(modes.n, max_n);
  const int n = modes.n;
  double base = 0.0;
  for (int j = 0; j < n; ++j) base += modes.mu[n + j];
  ParitySplitSpectrum split;
  split.even = {base};
  for (int j = 0; j < n; ++j) {
    double delta = modes.mu[j] - modes.mu[n + j];
    std::vector<double> new_even = split.even;
    std::vector<double> new_odd = split.odd;
    for (double v : split.odd) new_even.push_back(v + delta);
    for (double v : split.even) new_odd.push_back(v + delta);
    split.even = std::move(new_even);
    split.odd = std::move(new_odd);
  }
  std::sort(split.even.begin(), split.even.end());
  std::sort(split.odd.begin(), split.odd.end());
  return split;
}

int vacuum_parity(const BogoliubovModes& modes) {
  Complex det = Eigen::FullPivLU<Matrix>(modes.transform).determinant();
  if (std::abs(std::abs(det) - 1.0) > 1e-6 || std::abs(det.imag()) > 1e-6)
    throw std::runtime_error("transform determinant is not +-1");
  return det.real() > 0 ? 1 : -1;
}

RealVector cyclic_xy_z_spectrum(int n, double eps, int max_n) {
  check_reconstruct_budget(n, max_n);
  SampledHamiltonian h = fixed_hamiltonian(FixedKind::EpsXYPlusZ, n, eps);
  std::vector<double> merged;
  merged.reserve(1ULL << n);
  for (Boundary sector : {Boundary::SectorMinus, Boundary::SectorPlus}) {
    int eta = (sector == Boundary::SectorMinus) ? -1 : 1;
    BogoliubovModes modes = bogoliubov_diagonalize(assemble_quadratic_form(h, sector));
    int p_vac = vacuum_parity(modes);
    ParitySplitSpectrum split = reconstruct_spectrum_by_parity(modes, max_n);
    // states with (-1)^s p_vac = eta belong to this sector
    const std::vector<double>& keep = (p_vac == eta) ? split.even : split.odd;
    merged.insert(merged.end(), keep.begin(), keep.end());
  }
  if (merged.size() != (1ULL << n)) throw std::runtime_error("sector merge lost states");
  RealVector out(merged.size());
  std::copy(merged.begin(), merged.end(), out.begin());
  std::sort(out.begin(), out.end());
  return out;
}

ClosedFormSpectrum xy_plus_z_closed_form(int n, double eps, int max_n) {
  check_reconstruct_budget(n, max_n);
  ClosedFormSpectrum out;
  out.n_is_odd_prime = is_odd_prime(n);
  double base = 0.0;
  std::vector<double> deltas(n);
  for (int j = 1; j <= n; ++j) {
    double mu = std::sin(2.0 * M_PI * j / n);
    double chi = eps * mu - std::sqrt(eps * eps * mu * mu + 1.0);
    base -= chi;
    deltas[j - 1] = 2.0 * chi;
  }
  out.values = subset_sums_sorted(base, deltas);
  return out;
}

RealVector epsj_z_closed_form(int n, double eps, int max_n) {
  check_reconstruct_budget(n, max_n);
  double base = 0.0;
  std::vector<double> deltas(n);
  for (int j = 1; j <= n; ++j) {
    double c = std::pow(eps, j);
    base += c;
    deltas[j - 1] = -2.0 * c;
  }
  return subset_sums_sorted(base, deltas);
}

std::uint64_t count_levels_below(double base, const std::vector<double>& deltas, double x) {
  const int n = static_cast<int>(deltas.size());
  const int half = n / 2;
  std::vector<double> left{0.0}, right{0.0};
  for (int j = 0; j < half; ++j) {
    size_t count = left.size();
    for (size_t i = 0; i < count; ++i) left.push_back(left[i] + deltas[j]);
  }
  for (int j = half; j < n; ++j) {
    size_t count = right.size();
    for (size_t i = 0; i < count; ++i) right.push_back(right[i] + deltas[j]);
  }
  std::sort(right.begin(), right.end());
  std::uint64_t total = 0;
  double target = x - base;
  for (double a : left) {
    auto it = std::upper_bound(right.begin(), right.end(), target - a);
    total += static_cast<std::uint64_t>(it - right.begin());
  }
  return total;
}

double xy_plus_z_cdf_error(int n, double eps, double x) {
  const double cn = 1.0 / std::sqrt(n * (eps * eps + 1.0));
  double base = 0.0;
  std::vector<double> deltas(n);
  for (int j = 1; j <= n; ++j) {
    double mu = std::sin(2.0 * M_PI * j / n);
    double chi = cn * (eps * mu - std::sqrt(eps * eps * mu * mu + 1.0));
    base -= chi;
    deltas[j - 1] = 2.0 * chi;
  }
  double frac = static_cast<double>(count_levels_below(base, deltas, x)) / std::pow(2.0, n);
  return std::abs(frac - standard_normal_cdf(x));
}

namespace {

// out += coeff * a_k^+ v  (creation on site k, string sign from sites < k)
void accumulate_creation(int n, int k, Complex coeff, const Vector& v, Vector& out) {
  const std::uint64_t dim = 1ULL << n;
  const std::uint64_t bit = 1ULL << (n - k);
  for (std::uint64_t y = 0; y < dim; ++y) {
    if (y & bit) continue;
    if (v[y] == Complex(0, 0)) continue;
    int sign = std::popcount(y >> (n - k + 1)) & 1;
    out[y | bit] += (sign ? -coeff : coeff) * v[y];
  }
}

// The joint eigenstate |x>_t: periodic DFT modes for odd occupation,
// antiperiodic for even.
Vector t_basis_state(int n, std::uint64_t x) {
  const std::uint64_t dim = 1ULL << n;
  int s = std::popcount(x);
  double shift = (s % 2 == 1) ? 0.0 : 0.5;
  Vector v = Vector::Zero(dim);
  v[0] = 1.0;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = n; j >= 1; --j) {
    if (!(x & (1ULL << (n - j)))) continue;
    Vector next = Vector::Zero(dim);
    for (int k = 1; k <= n; ++k) {
      // mode creation with DFT coefficients omega_{j-shift}^k / sqrt(n)
      double angle = 2.0 * M_PI * (j - shift) * k / n;
      Complex coeff = inv_sqrt_n * Complex(std::cos(angle), std::sin(angle));
      accumulate_creation(n, k, coeff, v, next);
    }
    v = std::move(next);
  }
  return v;
}

}  // namespace

Matrix translation_eigenbasis_z(int n, int budget) {
  if (n > budget) throw std::invalid_argument("dense eigenbasis exceeds memory budget");
  const std::uint64_t dim = 1ULL << n;
  Matrix basis(dim, dim);
  for (std::uint64_t x = 0; x < dim; ++x) basis.col(x) = t_basis_state(n, x);
  return basis;
}

double translation_basis_purity(int n, int l, int budget) {
  if (n > budget) throw std::invalid_argument("dense eigenbasis exceeds memory budget");
  if (l < 1 || 2 * l >= n) throw std::invalid_argument("requires 1 <= l and 2l < n");
  const std::uint64_t dim = 1ULL << n;
  const std::uint64_t da = 1ULL << l;
  const std::uint64_t db = 1ULL << (n - l);
  KahanSum acc;
  for (std::uint64_t x = 0; x < dim; ++x) {
    Vector state = t_basis_state(n, x);
    // purity through the Schmidt matrix: psi_{a,c} = state[a * db + c]
    Eigen::Map<const Matrix> psi(state.data(), db, da);
    Matrix gram = psi.adjoint() * psi;
    acc.add(gram.squaredNorm());
  }
  return acc.value() / static_cast<double>(dim);
}

}  // namespace spinchain
