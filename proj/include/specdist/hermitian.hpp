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
#include <span>
#include <string>

#include "specdist/errors.hpp"
#include "specdist/linalg.hpp"
#include "specdist/matrix.hpp"
#include "specdist/tolerances.hpp"

namespace specdist {

/// Deviation from Hermiticity: max |A_ij - conj(A_ji)|.
inline double hermiticity_defect(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

/// (A + A^dagger) / 2.
inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  ComplexMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return r;
}

/// A ComplexMatrix that is Hermitian to construction tolerance.  The stored
/// entries are the exact Hermitian part of the input.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  /// Validates max |A_ij - conj(A_ji)| <= 1e-12 (1 + |A|_op).
  explicit HermitianMatrix(const ComplexMatrix& a) : m_(hermitian_part(a)) {
    m_.require_finite();
    const double defect = hermiticity_defect(a);
    if (defect > 0.0 && defect > tol::kConstruction * (1.0 + operator_norm(m_))) {
      throw ArgumentError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
  }

  HermitianMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
      : HermitianMatrix(ComplexMatrix(rows)) {}

  /// Takes the Hermitian part without validating; for values that are
  /// Hermitian by construction up to rounding.
  static HermitianMatrix from_hermitian_part(const ComplexMatrix& a) {
    HermitianMatrix h;
    h.m_ = hermitian_part(a);
    return h;
  }

  static HermitianMatrix identity(std::size_t n) {
    return from_hermitian_part(ComplexMatrix::identity(n));
  }

  static HermitianMatrix zero(std::size_t n) { return from_hermitian_part(ComplexMatrix(n)); }

  static HermitianMatrix diagonal(std::span<const double> values) {
    return from_hermitian_part(ComplexMatrix::diagonal(values));
  }
  static HermitianMatrix diagonal(std::initializer_list<double> values) {
    return from_hermitian_part(ComplexMatrix::diagonal(values));
  }

  const ComplexMatrix& matrix() const noexcept { return m_; }
  operator const ComplexMatrix&() const noexcept { return m_; }

  std::size_t dim() const noexcept { return m_.dim(); }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  double trace() const noexcept { return m_.trace().real(); }

  HermitianMatrix& operator+=(const HermitianMatrix& o) {
    m_ += o.m_;
    return *this;
  }
  HermitianMatrix& operator-=(const HermitianMatrix& o) {
    m_ -= o.m_;
    return *this;
  }
  HermitianMatrix& operator*=(double s) {
    m_ *= s;
    return *this;
  }

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }
  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) { return a.m_ == b.m_; }

 private:
  ComplexMatrix m_;
};

/// Ascending eigenvalues and a unitary eigenvector matrix.  Throws
/// ConvergenceError (carrying the off-diagonal residual) past the sweep cap.
inline EigenDecomposition hermitian_eigen(const HermitianMatrix& h) {
  return detail::jacobi_eigen(h.matrix());
}

/// V diag(f(lambda)) V^dagger.
template <class F>
HermitianMatrix spectral_map(const EigenDecomposition& eig, F&& f) {
  const std::size_t n = eig.values.size();
  ComplexMatrix r(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = eig.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return HermitianMatrix::from_hermitian_part(r);
}

inline bool is_unitary(const ComplexMatrix& u, double tolerance = tol::kVerification) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim())) <= tolerance;
}

/// U H U^dagger.
inline HermitianMatrix conjugate(const ComplexMatrix& u, const HermitianMatrix& h) {
  return HermitianMatrix::from_hermitian_part(u * h.matrix() * u.adjoint());
}

}  // namespace specdist
