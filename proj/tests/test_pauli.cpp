#include "doctest.h"

#include <cmath>
#include <vector>

#include "spinchain/pauli.hpp"

using namespace spinchain;

namespace {

// Reference single-qubit Paulis for the dense oracle.
Matrix sigma(int a) {
  Matrix m(2, 2);
  switch (a) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix dense_oracle(const std::vector<int>& labels) {
  Matrix m = sigma(labels[0]);
  for (size_t j = 1; j < labels.size(); ++j) m = kron(m, sigma(labels[j]));
  return m;
}

std::vector<int> unpack_labels(int code, int n) {
  std::vector<int> labels(n);
  for (int j = 0; j < n; ++j) {
    labels[j] = code & 3;
    code >>= 2;
  }
  return labels;
}

}  // namespace

TEST_CASE("single_site construction and errors") {
  PauliString p = PauliString::single_site(1, 3, 2);
  CHECK(p.labels() == std::vector<int>{3, 0});
  CHECK(p.phase() == Complex(1, 0));

  PauliString q = PauliString::single_site(2, 0, 3);
  CHECK(q.is_identity_word());
  CHECK(q == PauliString::identity(3));

  CHECK_THROWS_AS(PauliString::single_site(4, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::single_site(0, 1, 3), std::invalid_argument);
}

TEST_CASE("single-qubit products reproduce the algebra") {
  // s1 s2 = i s3
  PauliString r = mul(PauliString::single_site(1, 1, 1), PauliString::single_site(1, 2, 1));
  CHECK(r.label(1) == 3);
  CHECK(r.phase() == Complex(0, 1));

  // p p = identity with phase +1 for any label
  for (int a = 0; a < 4; ++a) {
    PauliString p = PauliString::single_site(1, a, 1);
    PauliString sq = mul(p, p);
    CHECK(sq.is_identity_word());
    CHECK(sq.phase() == Complex(1, 0));
  }

  // identity * q = q
  PauliString q = PauliString::from_labels({1, 2, 3});
  CHECK(mul(PauliString::identity(3), q) == q);
}

TEST_CASE("to_dense basics") {
  CHECK(max_abs(PauliString::single_site(1, 1, 1).to_dense() - sigma(1)) < 1e-15);

  Matrix zi = PauliString::from_labels({3, 0}).to_dense();
  Matrix expect = Matrix::Zero(4, 4);
  expect(0, 0) = 1;
  expect(1, 1) = 1;
  expect(2, 2) = -1;
  expect(3, 3) = -1;
  CHECK(max_abs(zi - expect) < 1e-15);

  CHECK(max_abs(PauliString::identity(3).to_dense() - Matrix::Identity(8, 8)) < 1e-15);

  CHECK_THROWS_AS(PauliString::identity(3).to_dense(2), std::invalid_argument);
}

TEST_CASE("exhaustive dense-vs-bitwise products and commutation, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    int words = 1 << (2 * n);
    for (int cp = 0; cp < words; ++cp) {
      PauliString p = PauliString::from_labels(unpack_labels(cp, n));
      Matrix dp = dense_oracle(unpack_labels(cp, n));
      REQUIRE(max_abs(p.to_dense() - dp) < 1e-12);
      for (int cq = 0; cq < words; ++cq) {
        PauliString q = PauliString::from_labels(unpack_labels(cq, n));
        Matrix dq = dense_oracle(unpack_labels(cq, n));

        PauliString prod = mul(p, q);
        REQUIRE(max_abs(prod.to_dense() - dp * dq) < 1e-12);

        bool dense_commutes = max_abs(dp * dq - dq * dp) < 1e-12;
        REQUIRE(commutes(p, q) == dense_commutes);
      }
    }
  }
}

TEST_CASE("commutation classification of neighbour bonds") {
  int n = 6;
  auto bond = [n](int j, int a, int b) {
    return mul(PauliString::single_site(j, a, n), PauliString::single_site(j % n + 1, b, n));
  };
  CHECK(commutes(bond(1, 3, 3), bond(5, 2, 2)));
  CHECK(commutes(bond(1, 3, 3), bond(2, 3, 3)));
  CHECK_FALSE(commutes(bond(1, 3, 3), bond(2, 2, 2)));
  CHECK(commutes(bond(1, 1, 2), bond(1, 1, 2)));
}

TEST_CASE("every nearest-neighbour bond anticommutes with exactly 16 others") {
  auto bond = [](int j, int a, int b, int n) {
    return mul(PauliString::single_site(j, a, n), PauliString::single_site(j % n + 1, b, n));
  };
  CHECK(anticommuting_neighbours(bond(11, 1, 2, 13)) == 16);
  CHECK(anticommuting_neighbours(bond(1, 3, 3, 5)) == 16);
  CHECK(anticommuting_neighbours(bond(1, 1, 1, 3)) == 16);
  // wrap-around bond
  CHECK(anticommuting_neighbours(bond(5, 2, 3, 5)) == 16);
  // exhaustive at n = 4: all 9n bonds see exactly 16
  for (int j = 1; j <= 4; ++j)
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) REQUIRE(anticommuting_neighbours(bond(j, a, b, 4)) == 16);

  CHECK_THROWS_AS(anticommuting_neighbours(PauliString::single_site(1, 1, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      anticommuting_neighbours(mul(PauliString::single_site(1, 1, 5), PauliString::single_site(3, 1, 5))),
      std::invalid_argument);
}

TEST_CASE("Hilbert-Schmidt inner product is the Kronecker delta on Pauli words") {
  for (int n = 1; n <= 3; ++n) {
    int words = 1 << (2 * n);
    for (int cp = 0; cp < words; ++cp) {
      Matrix dp = dense_oracle(unpack_labels(cp, n));
      for (int cq = 0; cq < words; ++cq) {
        Matrix dq = dense_oracle(unpack_labels(cq, n));
        double expect = (cp == cq) ? 1.0 : 0.0;
        REQUIRE(std::abs(hs_inner(dp, dq) - expect) < 1e-12);
      }
    }
  }
  CHECK(hs_inner(Matrix::Identity(4, 4), Matrix::Identity(4, 4)) == doctest::Approx(1.0));

  // (s1^(1) s2^(2), s1^(1) s2^(3)) = 0 by direct 4x4 trace
  Matrix a = dense_oracle({1, 2});
  Matrix b = dense_oracle({1, 3});
  CHECK(std::abs(hs_inner(a, b)) < 1e-12);

  CHECK_THROWS_AS(hs_inner(Matrix::Identity(2, 2), Matrix::Identity(4, 4)), std::invalid_argument);
}

TEST_CASE("non-identity Pauli words are traceless") {
  for (int n = 1; n <= 3; ++n) {
    int words = 1 << (2 * n);
    for (int c = 1; c < words; ++c) {
      PauliString p = PauliString::from_labels(unpack_labels(c, n));
      REQUIRE(std::abs(p.to_dense().trace()) < 1e-12);
    }
  }
}

TEST_CASE("mismatched qubit counts are rejected") {
  CHECK_THROWS_AS(mul(PauliString::identity(2), PauliString::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(commutes(PauliString::identity(2), PauliString::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("translated shifts labels cyclically") {
  PauliString p = PauliString::from_labels({1, 2, 0, 3});
  CHECK(p.translated().labels() == std::vector<int>{3, 1, 2, 0});
  PauliString q = p;
  for (int i = 0; i < 4; ++i) q = q.translated();
  CHECK(q == p);
}
