#include "doctest.h"

#include <cmath>
#include <set>

#include "spinchain/ensembles.hpp"

using namespace spinchain;

TEST_CASE("term counts per family") {
  CHECK(term_list({Family::Generic, 3}).size() == 27);
  CHECK(term_list({Family::Local, 2}).size() == 24);
  CHECK(term_list({Family::Jw, 4}).size() == 16);  // 4(n-1) bonds + n locals
  EnsembleSpec heis{Family::Heis, 5};
  CHECK(term_list(heis).size() == 15);
  CHECK(independent_coefficients(heis) == 3);
  heis.heis_site_dependent = true;
  CHECK(independent_coefficients(heis) == 15);
  CHECK(independent_coefficients({Family::Inv, 7}) == 9);
  CHECK(independent_coefficients({Family::InvLocal, 7}) == 12);
}

TEST_CASE("sampling is deterministic in (seed, index)") {
  EnsembleSpec spec{Family::Generic, 4, 99};
  SampledHamiltonian a = sample(spec, 5);
  SampledHamiltonian b = sample(spec, 5);
  SampledHamiltonian c = sample(spec, 6);
  CHECK(a.coefficients == b.coefficients);
  CHECK(a.coefficients != c.coefficients);
}

TEST_CASE("orbit replication: invariant families are translation invariant") {
  for (Family f : {Family::Inv, Family::InvLocal, Family::Heis}) {
    EnsembleSpec spec{f, 5, 3};
    SampledHamiltonian h = sample(spec, 0);
    // coefficient of each term equals the coefficient of its translate
    for (size_t i = 0; i < h.terms.size(); ++i) {
      PauliString shifted = h.terms[i].op.translated();
      bool found = false;
      for (size_t k = 0; k < h.terms.size(); ++k) {
        if (same_word(h.terms[k].op, shifted)) {
          found = true;
          REQUIRE(h.coefficients[k] == h.coefficients[i]);
        }
      }
      REQUIRE(found);
    }
  }
}

TEST_CASE("exact variance normalization") {
  // For n >= 3 every family normalizes exactly to 1.  At n = 2 the two bonds
  // of the ring realize coinciding Pauli words, which inflates the invariant
  // families: inv -> 4/3, inv-local -> 5/4, heis (3 orbits) -> 2.
  for (Family f : {Family::Generic, Family::Uniform, Family::Local, Family::Inv,
                   Family::InvLocal, Family::Jw, Family::Heis}) {
    for (int n = 3; n <= 6; ++n) {
      CHECK(expected_trace_h2({f, n}) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK(expected_trace_h2({Family::Generic, 2}) == doctest::Approx(1.0));
  CHECK(expected_trace_h2({Family::Local, 2}) == doctest::Approx(1.0));
  CHECK(expected_trace_h2({Family::Jw, 2}) == doctest::Approx(1.0));
  CHECK(expected_trace_h2({Family::Inv, 2}) == doctest::Approx(4.0 / 3.0));
  CHECK(expected_trace_h2({Family::InvLocal, 2}) == doctest::Approx(5.0 / 4.0));
  EnsembleSpec heis2{Family::Heis, 2};
  heis2.heis_site_dependent = true;
  CHECK(expected_trace_h2(heis2) == doctest::Approx(1.0));
}

TEST_CASE("Monte-Carlo mean of (2^-n) Tr(H^2) near 1") {
  EnsembleSpec spec{Family::Generic, 8, 2024};
  const int S = 200;
  double mean = 0, sq = 0;
  for (int s = 0; s < S; ++s) {
    double v = sample(spec, s).normalized_trace_h2();
    mean += v;
    sq += v * v;
  }
  mean /= S;
  double stderr_ = std::sqrt((sq / S - mean * mean) / (S - 1));
  CHECK(std::abs(mean - 1.0) < 5 * stderr_);
  CHECK(std::abs(mean - 1.0) < 0.05);
}

TEST_CASE("dense realization matches the term expansion") {
  EnsembleSpec spec{Family::Local, 3, 11};
  SampledHamiltonian h = sample(spec, 1);
  Matrix m = h.dense();
  Matrix expect = Matrix::Zero(8, 8);
  for (size_t i = 0; i < h.terms.size(); ++i)
    expect += h.coefficients[i] * h.terms[i].op.to_dense();
  CHECK(max_abs(m - expect) < 1e-12);
  CHECK(is_hermitian(m, 1e-12));
  // spectral sum rule: (2^-n) Tr(H^2) from coefficients equals the dense trace
  CHECK(h.normalized_trace_h2() ==
        doctest::Approx((m * m).trace().real() / 8.0).epsilon(1e-12));
}

TEST_CASE("fixed Hamiltonians") {
  SampledHamiltonian z3 = fixed_hamiltonian(FixedKind::ZField, 3);
  CHECK(z3.terms.size() == 3);
  for (double c : z3.coefficients) CHECK(c == 1.0);

  SampledHamiltonian e0 = fixed_hamiltonian(FixedKind::EpsXYPlusZ, 5, 0.0);
  SampledHamiltonian z5 = fixed_hamiltonian(FixedKind::ZField, 5);
  CHECK(max_abs(e0.dense() - z5.dense()) < 1e-14);

  SampledHamiltonian ej = fixed_hamiltonian(FixedKind::EpsJZ, 2, 2.0);
  CHECK(ej.coefficients == std::vector<double>{2.0, 4.0});

  CHECK_THROWS_AS(fixed_hamiltonian(FixedKind::ZField, 1), std::invalid_argument);
}

TEST_CASE("coefficient law is symmetric under a global sign flip") {
  // MC check on a low odd moment of a fixed-word coefficient
  EnsembleSpec spec{Family::Local, 4, 77};
  const int S = 4000;
  double m1 = 0, m3 = 0;
  for (int s = 0; s < S; ++s) {
    double c = sample(spec, s).coefficients[5];
    m1 += c;
    m3 += c * c * c;
  }
  double var = coefficient_variance(spec.family, spec.n);
  CHECK(std::abs(m1 / S) < 5 * std::sqrt(var / S));
  CHECK(std::abs(m3 / S) < 5 * std::sqrt(15 * var * var * var / S));
}

TEST_CASE("orbit-replicated heis at n=2 doubles its words") {
  EnsembleSpec heis2{Family::Heis, 2};
  CHECK(expected_trace_h2(heis2) == doctest::Approx(2.0));
}
