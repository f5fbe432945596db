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

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "specdist/errors.hpp"
#include "specdist/hermitian.hpp"
#include "specdist/pauli.hpp"
#include "specdist/random.hpp"
#include "specdist/tolerances.hpp"

namespace specdist {

/// Positive semidefinite, unit-trace Hermitian matrix.  Also the state
/// functional e -> tr(rho e).
class DensityMatrix {
 public:
  /// Throws ArgumentError unless eigenvalues >= -1e-10 and |tr - 1| <= 1e-10.
  explicit DensityMatrix(const HermitianMatrix& rho) : rho_(rho) {
    if (std::abs(rho_.trace() - 1.0) > tol::kDensity) {
      throw ArgumentError("density matrix trace is not 1");
    }
    const auto eig = hermitian_eigen(rho_);
    if (eig.values.front() < -tol::kDensity) {
      throw ArgumentError("density matrix is not positive semidefinite");
    }
  }

  explicit DensityMatrix(const ComplexMatrix& rho) : DensityMatrix(HermitianMatrix(rho)) {}

  const HermitianMatrix& hermitian() const noexcept { return rho_; }
  const ComplexMatrix& matrix() const noexcept { return rho_.matrix(); }
  std::size_t dim() const noexcept { return rho_.dim(); }

  /// omega(e) = tr(rho e).
  cplx expectation(const ComplexMatrix& e) const { return hs_inner(rho_, e); }

 private:
  HermitianMatrix rho_;
};

/// Real 3-vector with |r| <= 1 (+1e-10).
class BlochVector {
 public:
  BlochVector(double x, double y, double z) : r_{x, y, z} {
    for (double c : r_)
      if (!std::isfinite(c)) throw ArgumentError("Bloch vector is not finite");
    if (norm() > 1.0 + tol::kBlochRadius) throw ArgumentError("Bloch vector lies outside the unit ball");
  }
  explicit BlochVector(const std::array<double, 3>& r) : BlochVector(r[0], r[1], r[2]) {}

  double operator[](std::size_t i) const { return r_.at(i); }
  const std::array<double, 3>& components() const noexcept { return r_; }
  double norm() const noexcept { return std::sqrt(r_[0] * r_[0] + r_[1] * r_[1] + r_[2] * r_[2]); }

  friend double distance(const BlochVector& a, const BlochVector& b) {
    const double dx = a.r_[0] - b.r_[0], dy = a.r_[1] - b.r_[1], dz = a.r_[2] - b.r_[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
  }

 private:
  std::array<double, 3> r_;
};

/// (I + r . sigma) / 2.
inline DensityMatrix density_from_bloch(const BlochVector& r) {
  HermitianMatrix rho = (HermitianMatrix::identity(2) + pauli_vector(r[0], r[1], r[2])) * 0.5;
  return DensityMatrix(rho);
}

/// r_i = tr(rho sigma_i); qubits only.
inline BlochVector bloch_from_density(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw ArgumentError("Bloch vectors exist only for 2x2 density matrices");
  return BlochVector(rho.expectation(pauli(1)).real(), rho.expectation(pauli(2)).real(),
                     rho.expectation(pauli(3)).real());
}

inline DensityMatrix random_density(std::size_t n, Rng& rng) {
  return DensityMatrix(HermitianMatrix::from_hermitian_part(random_density_matrix(n, rng)));
}

inline DensityMatrix random_density(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(n, rng);
}

/// rho1 - rho2.
inline HermitianMatrix state_difference(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("state dimensions differ");
  return a.hermitian() - b.hermitian();
}

/// Sum of |eigenvalues| of a Hermitian matrix; equals trace_norm but keeps
/// full accuracy on small eigenvalues.
inline double hermitian_trace_norm(const HermitianMatrix& h) {
  double s = 0.0;
  for (double v : hermitian_eigen(h).values) s += std::abs(v);
  return s;
}

/// |rho1 - rho2|_1, without the conventional factor 1/2.
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return hermitian_trace_norm(state_difference(a, b));
}

/// Sign function of delta on its spectrum: sum_i sign(a_i) |i><i| over
/// eigenvalues with |a_i| > 1e-10; the rest get coefficient 0.  Summing
/// projectors makes the result independent of the eigenbasis chosen inside
/// degenerate blocks.
inline HermitianMatrix optimal_element_tracenorm(const HermitianMatrix& delta) {
  if (delta.matrix().max_abs() == 0.0) return HermitianMatrix::zero(delta.dim());
  return spectral_map(hermitian_eigen(delta), [](double a) {
    if (std::abs(a) <= tol::kDegenerateEigenvalue) return 0.0;
    return a > 0.0 ? 1.0 : -1.0;
  });
}

}  // namespace specdist
