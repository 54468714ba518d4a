#pragma once

#include <cstdint>
#include <vector>

#include "spinchain/ensembles.hpp"
#include "spinchain/spectra.hpp"

namespace spinchain {

/// Dense Fermi annihilation matrices a_j = (prod_{l<j} s_l^(3)) (s_j^(1) + i s_j^(2))/2.
std::vector<Matrix> jw_dense_operators(int n, int budget = kDenseBudget);

/// Hermitian 2n x 2n coefficient matrix of a fermion-quadratic Hamiltonian in
/// the ordered layout H = sum_jk  a_j^+ M[j,k] a_k + a_j^+ M[j,n+k] a_k^+
///                         + a_j M[n+j,k] a_k + a_j M[n+j,n+k] a_k^+.
/// The aa and a^+a^+ blocks are antisymmetric, and the spectrum of M is
/// symmetric about zero (particle-hole pairing).
struct QuadraticForm {
  int n = 0;
  Matrix m;
};

enum class Boundary {
  Open,         // bonds j = 1..n-1 only
  SectorMinus,  // ring bond included with eta = -1 (periodic fermions)
  SectorPlus,   // ring bond included with eta = +1 (antiperiodic fermions)
};

/// Builds the quadratic form of a chain whose terms are XX/XY/YX/YY bonds plus
/// s^(3) locals.  Ring bonds (site n) require a sector choice; any other term
/// shape is rejected.
QuadraticForm assemble_quadratic_form(const SampledHamiltonian& h,
                                      Boundary boundary = Boundary::Open);

/// Mode energies and the structured unitary T = [[U, V], [conj(V), conj(U)]]
/// with T M T^+ = diag(mu), mu_{j+n} = -mu_j and mu_1 >= ... >= mu_n >= 0.
struct BogoliubovModes {
  int n = 0;
  RealVector mu;  // length 2n
  Matrix transform;

  Eigen::Block<const Matrix> u() const { return transform.topLeftCorner(n, n); }
  Eigen::Block<const Matrix> v() const { return transform.topRightCorner(n, n); }
};

BogoliubovModes bogoliubov_diagonalize(const QuadraticForm& form);

/// All 2^n eigenvalues lambda_x = sum_j (mu_j x_j + mu_{j+n} (1 - x_j)), sorted.
RealVector reconstruct_spectrum(const BogoliubovModes& modes, int max_n = 26);

/// Same sums split by the parity of the occupation number s = sum x_j.
struct ParitySplitSpectrum {
  std::vector<double> even;
  std::vector<double> odd;
};
ParitySplitSpectrum reconstruct_spectrum_by_parity(const BogoliubovModes& modes,
                                                   int max_n = 26);

/// Parity of the Bogoliubov vacuum under eta = prod_j s_j^(3); +-1.
int vacuum_parity(const BogoliubovModes& modes);

/// Spectrum of the cyclic chain sum_j (eps s_j^(1) s_{j+1}^(2) + s_j^(3)),
/// assembled in both eta sectors and merged by the occupation-parity rule.
RealVector cyclic_xy_z_spectrum(int n, double eps, int max_n = 26);

/// Closed form lambda_x = sum_j (2 x_j - 1)(eps mu_j - sqrt(eps^2 mu_j^2 + 1))
/// with mu_j = sin(2 pi j / n).  Exact for odd prime n; extends to all n by
/// analyticity (a warning flag is reported through the return).
struct ClosedFormSpectrum {
  RealVector values;
  bool n_is_odd_prime = false;
};
ClosedFormSpectrum xy_plus_z_closed_form(int n, double eps, int max_n = 26);

/// lambda_x = sum_j eps^j (-1)^{x_j}, sorted.
RealVector epsj_z_closed_form(int n, double eps, int max_n = 26);

/// Number of subset sums base + sum_{j in S} delta_j that are <= x, counted by
/// meet-in-the-middle; supports chains far beyond the dense budget.
std::uint64_t count_levels_below(double base, const std::vector<double>& deltas, double x);

/// E_n(x) for the closed-form XY+Z chain rescaled to unit spectral variance,
/// evaluated without materializing the 2^n spectrum.
double xy_plus_z_cdf_error(int n, double eps, double x);

/// The 2^n joint eigenstates of H^(Z) and the translation matrix, as columns
/// ordered by the occupation word x.  Built from DFT-rotated Fermi modes:
/// periodic modes for odd occupation, antiperiodic for even.
Matrix translation_eigenbasis_z(int n, int budget = 12);

/// Average purity (2^-n) sum_x Tr(rho_{l,x}^2) over that basis.
double translation_basis_purity(int n, int l, int budget = 12);

bool is_odd_prime(int n);

}  // namespace spinchain
