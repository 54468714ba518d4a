#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinchain/la.hpp"

namespace spinchain {

// Dense matrices larger than 2^14 are refused by default (4 GiB of complex
// doubles at n = 14).
inline constexpr int kDenseBudget = 14;

/// A phased word over the single-qubit Paulis: phase * s^(a_1) x ... x s^(a_n)
/// with a_j in {0,1,2,3} and phase in {1, i, -1, -i}.
///
/// Internally the word is held as two bitmasks (X part, Z part) plus the
/// exponent of i for the operator written in X^x Z^z form; products and
/// commutation are bitwise.  Site 1 is the leftmost tensor factor and maps to
/// the most significant bit of a standard-basis index.
class PauliString {
 public:
  static PauliString identity(int n);
  static PauliString single_site(int site, int label, int n);
  static PauliString from_labels(const std::vector<int>& labels, int phase_quarter = 0);

  int n() const { return n_; }
  int label(int site) const;  // site in 1..n
  std::vector<int> labels() const;

  /// Exponent q of the external phase i^q multiplying the plain tensor word.
  int phase_quarter() const;
  Complex phase() const;

  bool is_identity_word() const { return x_ == 0 && z_ == 0; }
  int weight() const;  // number of non-identity sites

  /// Sitewise product with accumulated phase.
  friend PauliString mul(const PauliString& p, const PauliString& q);
  friend bool commutes(const PauliString& p, const PauliString& q);
  friend bool same_word(const PauliString& p, const PauliString& q);

  /// Cyclic shift of all site labels by +1 (conjugation by the translation
  /// matrix T).
  PauliString translated() const;

  /// Action on a standard-basis index: P|y> = coeff |y'>.
  struct BasisAction {
    std::uint64_t index;
    Complex coeff;
  };
  BasisAction apply(std::uint64_t basis_index) const;

  Matrix to_dense(int budget = kDenseBudget) const;

  std::string to_string() const;

  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  bool operator==(const PauliString& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_ && k_ == other.k_;
  }

 private:
  PauliString(int n, std::uint64_t x, std::uint64_t z, int k)
      : n_(n), x_(x), z_(z), k_(k & 3) {}

  std::uint64_t site_bit(int site) const { return 1ULL << (n_ - site); }

  int n_ = 0;
  std::uint64_t x_ = 0;  // bit (n - j) set iff site j has an X component
  std::uint64_t z_ = 0;
  int k_ = 0;  // operator = i^k * X^x Z^z
};

PauliString mul(const PauliString& p, const PauliString& q);
bool commutes(const PauliString& p, const PauliString& q);
bool same_word(const PauliString& p, const PauliString& q);

/// Number of cyclic nearest-neighbour two-site strings anticommuting with p,
/// where p itself must be of the form s_j^(a) s_{j+1}^(b) with a,b in 1..3.
int anticommuting_neighbours(const PauliString& p);

/// Scaled Hilbert-Schmidt inner product Tr(A B^dagger) / 2^n.
double hs_inner(const Matrix& a, const Matrix& b);

}  // namespace spinchain
