#pragma once

#include <vector>

#include "spinchain/ensembles.hpp"
#include "spinchain/spectra.hpp"

namespace spinchain {

/// Minimum consecutive gap of a sorted spectrum.
double min_gap(const RealVector& spectrum);

struct KramersReport {
  bool paired = false;          // every eigenvalue has even multiplicity
  double max_pair_gap = 0.0;    // worst |l_{2k+1} - l_{2k}| under greedy pairing
  double symmetry_residual = 0.0;  // || S H - conj(H) S ||_max with S = prod s_j^(2)
};

/// Greedy adjacent pairing of the sorted spectrum plus the antiunitary
/// symmetry residual check.
KramersReport kramers_check(const SampledHamiltonian& h, double tol = 1e-8);

struct CensusRow {
  Family family;
  int n = 0;
  int samples = 0;
  double nondegenerate_fraction = 0.0;
};

/// Fraction of samples whose minimum gap exceeds the threshold.
CensusRow degeneracy_census(const EnsembleSpec& spec, int samples, double threshold = 1e-10);

}  // namespace spinchain
