#include "spinchain/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace spinchain {

namespace {

void check_n(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("qubit count must be in 1..64");
}

// label -> (x bit, z bit): 0 -> (0,0), X -> (1,0), Y -> (1,1), Z -> (0,1)
constexpr int kXBit[4] = {0, 1, 1, 0};
constexpr int kZBit[4] = {0, 0, 1, 1};

}  // namespace

PauliString PauliString::identity(int n) {
  check_n(n);
  return PauliString(n, 0, 0, 0);
}

PauliString PauliString::single_site(int site, int label, int n) {
  check_n(n);
  if (site < 1 || site > n) throw std::invalid_argument("site out of range");
  if (label < 0 || label > 3) throw std::invalid_argument("label out of range");
  PauliString p(n, 0, 0, 0);
  if (kXBit[label]) p.x_ |= p.site_bit(site);
  if (kZBit[label]) p.z_ |= p.site_bit(site);
  if (label == 2) p.k_ = 1;  // Y = i X Z
  return p;
}

PauliString PauliString::from_labels(const std::vector<int>& labels, int phase_quarter) {
  int n = static_cast<int>(labels.size());
  check_n(n);
  PauliString p(n, 0, 0, phase_quarter);
  for (int j = 1; j <= n; ++j) {
    int a = labels[j - 1];
    if (a < 0 || a > 3) throw std::invalid_argument("label out of range");
    if (kXBit[a]) p.x_ |= p.site_bit(j);
    if (kZBit[a]) p.z_ |= p.site_bit(j);
    if (a == 2) p.k_ = (p.k_ + 1) & 3;
  }
  return p;
}

int PauliString::label(int site) const {
  if (site < 1 || site > n_) throw std::invalid_argument("site out of range");
  int x = (x_ >> (n_ - site)) & 1;
  int z = (z_ >> (n_ - site)) & 1;
  if (x && z) return 2;
  if (x) return 1;
  if (z) return 3;
  return 0;
}

std::vector<int> PauliString::labels() const {
  std::vector<int> out(n_);
  for (int j = 1; j <= n_; ++j) out[j - 1] = label(j);
  return out;
}

int PauliString::phase_quarter() const {
  int y_count = std::popcount(x_ & z_);
  return (k_ - y_count) & 3;
}

Complex PauliString::phase() const {
  static const Complex quadrants[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return quadrants[phase_quarter()];
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

PauliString mul(const PauliString& p, const PauliString& q) {
  if (p.n_ != q.n_) throw std::invalid_argument("mismatched qubit counts");
  // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
  int k = p.k_ + q.k_ + 2 * (std::popcount(p.z_ & q.x_) & 1);
  return PauliString(p.n_, p.x_ ^ q.x_, p.z_ ^ q.z_, k);
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n_ != q.n_) throw std::invalid_argument("mismatched qubit counts");
  int sp = (std::popcount(p.x_ & q.z_) + std::popcount(p.z_ & q.x_)) & 1;
  return sp == 0;
}

bool same_word(const PauliString& p, const PauliString& q) {
  return p.n_ == q.n_ && p.x_ == q.x_ && p.z_ == q.z_;
}

PauliString PauliString::translated() const {
  // site j -> j+1 cyclically; bit (n-j) -> bit (n-j-1), bit 0 wraps to n-1.
  auto rot = [this](std::uint64_t m) {
    std::uint64_t top = (m & 1ULL) << (n_ - 1);
    return (m >> 1) | top;
  };
  return PauliString(n_, rot(x_), rot(z_), k_);
}

PauliString::BasisAction PauliString::apply(std::uint64_t y) const {
  // X^x Z^z |y> = (-1)^{|z & y|} |y ^ x>, then i^k on top.
  static const Complex quadrants[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int sign = std::popcount(z_ & y) & 1;
  Complex c = quadrants[(k_ + 2 * sign) & 3];
  return {y ^ x_, c};
}

Matrix PauliString::to_dense(int budget) const {
  if (n_ > budget) throw std::invalid_argument("dense Pauli realization exceeds memory budget");
  std::uint64_t dim = 1ULL << n_;
  Matrix m = Matrix::Zero(dim, dim);
  for (std::uint64_t y = 0; y < dim; ++y) {
    BasisAction act = apply(y);
    m(act.index, y) = act.coeff;
  }
  return m;
}

std::string PauliString::to_string() const {
  static const char* phases[4] = {"+", "+i", "-", "-i"};
  static const char letters[4] = {'I', 'X', 'Y', 'Z'};
  std::string out = phases[phase_quarter()];
  for (int j = 1; j <= n_; ++j) out += letters[label(j)];
  return out;
}

int anticommuting_neighbours(const PauliString& p) {
  int n = p.n();
  if (n < 3) throw std::invalid_argument("requires n >= 3");
  int support[2] = {0, 0};
  int count = 0;
  for (int j = 1; j <= n; ++j) {
    if (p.label(j) != 0) {
      if (count < 2) support[count] = j;
      ++count;
    }
  }
  bool adjacent = count == 2 && (support[1] == support[0] + 1 ||
                                 (support[0] == 1 && support[1] == n));
  if (!adjacent) throw std::invalid_argument("not a nearest-neighbour two-site string");

  int total = 0;
  for (int j = 1; j <= n; ++j) {
    int jp = j % n + 1;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        PauliString q = mul(PauliString::single_site(j, a, n), PauliString::single_site(jp, b, n));
        if (!commutes(p, q)) ++total;
      }
  }
  return total;
}

double hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("dimension mismatch");
  Complex tr = (a * b.adjoint()).trace();
  return tr.real() / static_cast<double>(a.rows());
}

}  // namespace spinchain
