#pragma once

#include <array>
#include <vector>

#include "spinchain/la.hpp"

namespace spinchain {

/// Conjectured joint eigenvalue density of the two-qubit chain ensemble
/// (m = 9 Gaussian Pauli coefficients of variance 1/9), restricted to the
/// trace-zero hyperplane.  The 24 permutation summands collapse to three
/// distinct sign products of multiplicity 8.
namespace hciz {

inline constexpr int kTermCount = 9;

/// The overall constant C * C5 of the density.
double density_constant();

/// Density value at a point of the hyperplane sum(lambda) = 0; throws if the
/// argument leaves the hyperplane by more than 1e-12.
double joint_density_n2(const std::array<double, 4>& lambda);

/// rho_{2,1}(lambda): two nested adaptive quadratures with the remaining
/// coordinate eliminated by the trace constraint.  Absolute accuracy ~1e-4.
double one_point_n2(double lambda);
std::vector<double> one_point_n2(const std::vector<double>& lambda_grid);

/// rho_{2,2}(lambda, pinned): one adaptive quadrature.
double two_point_n2(double lambda, double pinned = 0.0);
std::vector<double> two_point_n2(const std::vector<double>& lambda_grid, double pinned = 0.0);

/// Integral of the density over the hyperplane (should be 1).
double hyperplane_normalization(double abs_tol = 2e-4);

/// Integral of rho_{2,2}(lambda, 0); equals rho_{2,1}(0) by construction.
double two_point_normalization();

}  // namespace hciz

}  // namespace spinchain
