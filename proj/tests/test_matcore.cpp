// Copyright 2026 The specdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <random>

#include "gtest/gtest.h"
#include "specdist/hermitian.hpp"
#include "specdist/linalg.hpp"
#include "specdist/matrix.hpp"
#include "specdist/pauli.hpp"
#include "specdist/random.hpp"
#include "specdist/states.hpp"

using namespace specdist;
using namespace std::complex_literals;

namespace {

ComplexMatrix swap_gate() {
  ComplexMatrix s(4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

HermitianMatrix d4_matrix() {
  return (pauli_string({1, 1}) + pauli_string({2, 2}) + pauli_string({3, 3})) * 0.25;
}

}  // namespace

TEST(HermitianEigen, DiagonalInputIsSortedAscending) {
  const auto eig = hermitian_eigen(HermitianMatrix::diagonal({3.0, 1.0}));
  EXPECT_DOUBLE_EQ(eig.values[0], 1.0);
  EXPECT_DOUBLE_EQ(eig.values[1], 3.0);
  EXPECT_DOUBLE_EQ(std::abs(eig.vectors(1, 0)), 1.0);
  EXPECT_DOUBLE_EQ(std::abs(eig.vectors(0, 1)), 1.0);
}

TEST(HermitianEigen, PauliSpectrum) {
  for (int i = 1; i <= 3; ++i) {
    const auto eig = hermitian_eigen(pauli(i));
    EXPECT_NEAR(eig.values[0], -1.0, 1e-14);
    EXPECT_NEAR(eig.values[1], 1.0, 1e-14);
  }
}

TEST(HermitianEigen, D4IsQuarterOfTwoSwapMinusIdentity) {
  // Oracle: the SWAP gate has spectrum {+1 x3, -1}, so (2 SWAP - I)/4 has
  // {1/4 x3, -3/4}.
  const ComplexMatrix oracle = (swap_gate() * 2.0 - ComplexMatrix::identity(4)) * 0.25;
  EXPECT_LE(max_abs_diff(d4_matrix(), oracle), 1e-15);
  const auto eig = hermitian_eigen(d4_matrix());
  EXPECT_NEAR(eig.values[0], -0.75, 1e-13);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(eig.values[k], 0.25, 1e-13);
}

TEST(HermitianEigen, ResidualAndUnitarityOnRandomMatrices) {
  Rng rng(11);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u, 32u}) {
    const HermitianMatrix h = random_hermitian(n, rng);
    const auto eig = hermitian_eigen(h);
    const double hn = operator_norm(h);
    EXPECT_TRUE(std::is_sorted(eig.values.begin(), eig.values.end()));
    EXPECT_LE(max_abs_diff(eig.vectors.adjoint() * eig.vectors, ComplexMatrix::identity(n)), 1e-10);
    const ComplexMatrix av = h.matrix() * eig.vectors;
    for (std::size_t k = 0; k < n; ++k) {
      double col = 0.0;
      for (std::size_t i = 0; i < n; ++i) col = std::max(col, std::abs(av(i, k) - eig.vectors(i, k) * eig.values[k]));
      EXPECT_LE(col, 1e-10 * hn);
    }
    const HermitianMatrix back = spectral_map(eig, [](double v) { return v; });
    EXPECT_LE(operator_norm(back.matrix() - h.matrix()), 1e-9 * (1.0 + hn));
  }
}

TEST(Norms, OperatorNormExamples) {
  EXPECT_NEAR(operator_norm(ComplexMatrix::identity(3)), 1.0, 1e-15);
  EXPECT_NEAR(operator_norm(pauli(3)), 1.0, 1e-15);
  // Block form [[0, -a], [a, 0]] has norm |a|_op.
  Rng rng(3);
  for (std::size_t n : {2u, 3u}) {
    const ComplexMatrix a = random_hermitian(n, rng).matrix() + 1i * random_hermitian(n, rng).matrix();
    ComplexMatrix block(2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        block(i, n + j) = -a(i, j);
        block(n + i, j) = a(i, j);
      }
    EXPECT_NEAR(operator_norm(block), operator_norm(a), 1e-12);
  }
}

TEST(Norms, TraceNormExamples) {
  EXPECT_EQ(trace_norm(ComplexMatrix(2)), 0.0);
  EXPECT_NEAR(trace_norm(ComplexMatrix::diagonal({0.6, -0.6})), 1.2, 1e-15);
  const double r[3] = {0.48, -0.6, 0.64};  // |r| = 1
  const HermitianMatrix h = pauli_vector(r[0], r[1], r[2]) * 0.5;
  const auto eig = hermitian_eigen(h);
  EXPECT_NEAR(eig.values[0], -0.5, 1e-14);
  EXPECT_NEAR(eig.values[1], 0.5, 1e-14);
  EXPECT_NEAR(trace_norm(h), 1.0, 1e-14);
}

TEST(Norms, OrderingAndUnitaryInvariance) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const ComplexMatrix a = random_hermitian(n, rng).matrix() + 1i * random_hermitian(n, rng).matrix();
    const double op = operator_norm(a), tr = trace_norm(a);
    EXPECT_LE(op, tr + 1e-12);
    EXPECT_LE(tr, static_cast<double>(n) * op + 1e-12);

    const HermitianMatrix h = random_hermitian(n, rng);
    const ComplexMatrix u = random_unitary(n, rng);
    const HermitianMatrix c = conjugate(u, h);
    EXPECT_NEAR(operator_norm(c), operator_norm(h), 1e-10);
    EXPECT_NEAR(trace_norm(c), trace_norm(h), 1e-10);
  }
}

TEST(Norms, RankDeficientTraceNormKeepsSmallSingularValues) {
  // diag(1, 1e-9, 0): the squared-Gram route would lose the middle value.
  EXPECT_NEAR(trace_norm(ComplexMatrix::diagonal({1.0, 1e-9, 0.0}) * cplx(0.0, 1.0)), 1.0 + 1e-9, 1e-15);
}

TEST(HsInner, Examples) {
  EXPECT_EQ(hs_inner(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), cplx(2.0));
  EXPECT_EQ(hs_inner(pauli(1), pauli(2)), cplx(0.0));
  const double dr[3] = {0.3, -0.2, 0.5};
  const double len = std::sqrt(0.09 + 0.04 + 0.25);
  const HermitianMatrix delta = pauli_vector(dr[0], dr[1], dr[2]) * 0.5;
  const HermitianMatrix eo = pauli_vector(dr[0], dr[1], dr[2]) * (1.0 / len);
  EXPECT_NEAR(hs_inner(delta, eo).real(), len, 1e-15);
  EXPECT_NEAR(hs_inner(delta, eo).imag(), 0.0, 1e-15);
}

TEST(HsInner, ConjugateSymmetric) {
  Rng rng(9);
  const ComplexMatrix a = random_hermitian(3, rng).matrix() + 1i * random_hermitian(3, rng).matrix();
  const ComplexMatrix b = random_hermitian(3, rng).matrix() + 1i * random_hermitian(3, rng).matrix();
  EXPECT_LE(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))), 1e-13);
}

TEST(Kron, ExamplesAndEigenvalueProducts) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), pauli(3)), ComplexMatrix::diagonal({1.0, -1.0, 1.0, -1.0}));
  EXPECT_EQ(commutator(pauli(1), pauli(2)), pauli(3).matrix() * cplx(0.0, 2.0));
  EXPECT_EQ(pauli_string({1, 1}), HermitianMatrix::from_hermitian_part(kron(pauli(1), pauli(1))));
  EXPECT_EQ(pauli_string({3}, -1).matrix(), pauli(3).matrix() * -1.0);
  EXPECT_EQ(kron(pauli(1), pauli(2)).dim(), 4u);

  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianMatrix e = random_hermitian(2, rng);
    const auto ev = hermitian_eigen(e).values;
    std::vector<double> products{ev[0] * ev[0], ev[0] * ev[1], ev[1] * ev[0], ev[1] * ev[1]};
    std::sort(products.begin(), products.end());
    const auto kv = hermitian_eigen(HermitianMatrix::from_hermitian_part(kron(e, e))).values;
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(kv[k], products[k], 1e-12);
  }
}

TEST(HermitianMatrix, RejectsNonHermitianInput) {
  EXPECT_THROW(HermitianMatrix(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), ArgumentError);
  EXPECT_NO_THROW(HermitianMatrix(ComplexMatrix{{0.0, 1.0}, {1.0 + 1e-14, 0.0}}));
  EXPECT_THROW(ComplexMatrix({{1.0, 2.0}}), ArgumentError);
  EXPECT_THROW(ComplexMatrix({{std::nan(""), 0.0}, {0.0, 0.0}}), ArgumentError);
}

TEST(HermitianBasis, OrthogonalTracelessAndSpanning) {
  Rng rng(4);
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    const HermitianBasis basis(n);
    ASSERT_EQ(basis.size(), n * n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i != basis.identity_index()) {
        EXPECT_NEAR(basis[i].trace(), 0.0, 1e-15);
        EXPECT_NEAR(hs_inner(basis[i], basis[i]).real(), 2.0, 1e-14);
      }
      for (std::size_t j = i + 1; j < basis.size(); ++j) EXPECT_NEAR(std::abs(hs_inner(basis[i], basis[j])), 0.0, 1e-14);
    }
    const HermitianMatrix h = random_hermitian(n, rng);
    const auto c = basis.real_coefficients(h);
    EXPECT_LE(max_abs_diff(basis.reconstruct(c), h), 1e-12);
  }
  const HermitianBasis qubit(2);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(qubit[i], pauli(i + 1));
  EXPECT_EQ(qubit[3], pauli(0));
}

TEST(Random, DeterministicAndWellFormed) {
  const ComplexMatrix u1 = random_unitary(2, std::uint64_t{77});
  const ComplexMatrix u2 = random_unitary(2, std::uint64_t{77});
  EXPECT_EQ(u1, u2);
  EXPECT_LE(max_abs_diff(u1.adjoint() * u1, ComplexMatrix::identity(2)), 1e-12);
  for (std::size_t n : {3u, 6u, 12u}) {
    const ComplexMatrix u = random_unitary(n, std::uint64_t{n});
    EXPECT_LE(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(n)), 1e-12);
  }
  const DensityMatrix rho = random_density(3, std::uint64_t{5});
  EXPECT_EQ(rho.matrix(), random_density(3, std::uint64_t{5}).matrix());
  EXPECT_GE(hermitian_eigen(rho.hermitian()).values.front(), -1e-12);
  EXPECT_NEAR(rho.hermitian().trace(), 1.0, 1e-12);
  EXPECT_EQ(random_hermitian(4, std::uint64_t{1}), random_hermitian(4, std::uint64_t{1}));
  EXPECT_THROW(random_unitary(0, std::uint64_t{1}), ArgumentError);
  EXPECT_THROW(random_density(0, std::uint64_t{1}), ArgumentError);
}

TEST(Linalg, CholeskyInverse) {
  Rng rng(8);
  const ComplexMatrix g = random_hermitian(5, rng).matrix() + 1i * random_hermitian(5, rng).matrix();
  const ComplexMatrix a = g.adjoint() * g + ComplexMatrix::identity(5);
  const auto l = cholesky(a);
  ASSERT_TRUE(l.has_value());
  EXPECT_LE(max_abs_diff(cholesky_inverse(*l) * a, ComplexMatrix::identity(5)), 1e-10);
  EXPECT_FALSE(cholesky(ComplexMatrix::diagonal({1.0, -1.0})).has_value());
}
