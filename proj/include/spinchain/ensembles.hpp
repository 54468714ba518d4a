#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinchain/pauli.hpp"

namespace spinchain {

/// The seven random nearest-neighbour chain families.
enum class Family { Generic, Uniform, Local, Inv, InvLocal, Jw, Heis };

Family family_from_string(const std::string& name);
std::string family_name(Family f);

struct EnsembleSpec {
  Family family = Family::Generic;
  int n = 2;
  std::uint64_t seed = 0;
  // The Heisenberg display carries a site index on its coefficients while the
  // surrounding text counts only 3 independent variables; both readings are
  // supported.  Default: 3 orbit coefficients replicated around the ring.
  bool heis_site_dependent = false;
};

/// One Pauli term of a chain Hamiltonian.  Terms sharing an orbit id share one
/// random coefficient (translationally-invariant families).
struct Term {
  PauliString op;
  int site = 0;  // bond/local site index j
  int a = 0;
  int b = 0;  // b = 0 marks a local term s_j^(a)
  int orbit = 0;
};

/// Deterministic term enumeration: site-major, then b, then a.
std::vector<Term> term_list(const EnsembleSpec& spec);

/// Number of independent random coefficients (orbits).
int independent_coefficients(const EnsembleSpec& spec);

/// Per-coefficient variance of the family law at chain length n.
double coefficient_variance(Family family, int n);

struct SampledHamiltonian {
  EnsembleSpec spec;
  std::vector<Term> terms;
  std::vector<double> coefficients;  // per term, orbit-replicated where shared

  int n() const { return spec.n; }
  Matrix dense(int budget = kDenseBudget) const;

  /// (2^-n) Tr(H^2), evaluated exactly by collapsing coefficients of terms
  /// that realize the same Pauli word before squaring.
  double normalized_trace_h2() const;

  /// Multiplies every coefficient by c.
  void scale(double c);

  bool has_local_terms() const;
  /// Every term is a two-site bond, so conjugation by S = prod s_j^(2) maps H
  /// to its entrywise conjugate.
  bool all_even_weight() const;
};

/// Draws sample `index` of the ensemble; deterministic in (spec.seed, index).
SampledHamiltonian sample(const EnsembleSpec& spec, std::uint64_t index = 0);

/// Exact ensemble expectation of (2^-n) Tr(H^2) in closed form (word-collapsed
/// sum of coefficient variances).
double expected_trace_h2(const EnsembleSpec& spec);

enum class FixedKind { ZField, EpsXYPlusZ, EpsJZ };

/// The named deterministic Hamiltonians: sum s_j^(3); sum (eps s_j^(1)
/// s_{j+1}^(2) + s_j^(3)) on the ring; sum eps^j s_j^(3).
SampledHamiltonian fixed_hamiltonian(FixedKind kind, int n, double eps = 0.0);

}  // namespace spinchain
