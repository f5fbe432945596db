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

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "specdist/errors.hpp"
#include "specdist/hermitian.hpp"
#include "specdist/matrix.hpp"

namespace specdist {

/// The library's RNG.  Callers own the engine; the seed overloads below
/// build a fresh one.
using Rng = std::mt19937_64;

namespace detail {
inline void require_positive(std::size_t n) {
  if (n < 1) throw ArgumentError("dimension must be at least 1");
}

inline ComplexMatrix ginibre(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(n);
  for (auto& z : g.entries()) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = cplx(re, im);
  }
  return g;
}
}  // namespace detail

/// (G + G^dagger) / 2 for a complex Gaussian G.
inline HermitianMatrix random_hermitian(std::size_t n, Rng& rng) {
  detail::require_positive(n);
  return HermitianMatrix::from_hermitian_part(detail::ginibre(n, rng));
}

/// Haar-distributed unitary: the Q factor of a Ginibre matrix from
/// Gram-Schmidt (which leaves R with a positive diagonal).  Each column is
/// orthogonalized twice.
inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  detail::require_positive(n);
  ComplexMatrix q = detail::ginibre(n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cplx dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

/// G^dagger G / tr(G^dagger G).
inline ComplexMatrix random_density_matrix(std::size_t n, Rng& rng) {
  detail::require_positive(n);
  const ComplexMatrix g = detail::ginibre(n, rng);
  ComplexMatrix rho = g.adjoint() * g;
  rho *= 1.0 / rho.trace().real();
  return hermitian_part(rho);
}

/// Random traceless Hermitian matrix.
inline HermitianMatrix random_traceless_hermitian(std::size_t n, Rng& rng) {
  HermitianMatrix h = random_hermitian(n, rng);
  const double shift = h.trace() / static_cast<double>(n);
  return h - HermitianMatrix::identity(n) * shift;
}

inline HermitianMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_hermitian(n, rng);
}

inline ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(n, rng);
}

}  // namespace specdist
