#pragma once

#include <vector>

#include "spinchain/ensembles.hpp"
#include "spinchain/spectra.hpp"

namespace spinchain {

/// Reduced state on the first l qubits of a unit vector on n qubits.  Qubit 1
/// is the most significant bit of the basis index.
Matrix partial_trace(const Vector& state, int keep, int n);

/// Tr(rho^2), computed as the squared Frobenius norm of rho.
double purity(const Matrix& rho);

double linear_entropy(const Matrix& rho);

/// Cyclic shift |x1 x2 ... xn> -> |xn x1 ... x_{n-1}> as a basis permutation.
class TranslationOp {
 public:
  explicit TranslationOp(int n);
  int n() const { return n_; }
  std::uint64_t image(std::uint64_t basis_index) const;
  Vector apply(const Vector& state) const;
  Matrix dense() const;

 private:
  int n_;
};

struct SingleQubitReport {
  bool applicable = false;  // false when the spectrum is degenerate
  double min_gap = 0.0;
  double max_deviation = 0.0;  // max_k || rho_{1,k} - I/2 ||_max
};

/// For a chain without local terms and a simple spectrum, every eigenvector
/// reduces to the maximally mixed state on one qubit.
SingleQubitReport check_single_qubit_theorem(const SampledHamiltonian& h,
                                             double degeneracy_threshold = 1e-10);

struct BlockPurityReport {
  bool applicable = false;  // joint T eigenbasis available (simple spectrum)
  double min_gap = 0.0;
  double average_purity = 0.0;
  double lower = 0.0;   // 2^-l
  double upper = 0.0;   // 2^-l + 2^l / n
  bool within_bounds = false;
  /// proportion of eigenstates with purity above 2^-l + epsilon, paired with
  /// the corollary bound 2^l / (n epsilon)
  double epsilon = 0.0;
  double proportion_above = 0.0;
  double proportion_bound = 0.0;
};

/// Average reduced purity over all eigenstates of a translationally-invariant
/// sample on the first l qubits, with the two-sided bound.
BlockPurityReport check_block_purity_bound(const SampledHamiltonian& h, int l,
                                           double degeneracy_threshold = 1e-10,
                                           double epsilon = 0.1);

/// Per-eigenstate purities on the first l qubits (ordered by eigenvalue).
std::vector<double> eigenstate_purities(const EigenSystem& es, int l, int n);

}  // namespace spinchain
