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
#include <vector>

#include "specdist/errors.hpp"
#include "specdist/hermitian.hpp"
#include "specdist/matrix.hpp"

namespace specdist {

/// pauli(0) = I, pauli(1..3) = sigma_x, sigma_y, sigma_z.
inline HermitianMatrix pauli(int i) {
  using namespace std::complex_literals;
  switch (i) {
    case 0: return HermitianMatrix::identity(2);
    case 1: return HermitianMatrix::from_hermitian_part(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
    case 2: return HermitianMatrix::from_hermitian_part(ComplexMatrix{{0.0, -1i}, {1i, 0.0}});
    case 3: return HermitianMatrix::from_hermitian_part(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}});
    default: throw ArgumentError("Pauli index must be in 0..3");
  }
}

/// "I", "X", "Y", "Z" -> 0..3.
inline int pauli_index(char letter) {
  switch (letter) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: throw ArgumentError(std::string("unknown Pauli letter '") + letter + "'");
  }
}

inline char pauli_letter(int i) {
  if (i < 0 || i > 3) throw ArgumentError("Pauli index must be in 0..3");
  return "IXYZ"[i];
}

/// sign * sigma_{i1} (x) sigma_{i2} (x) ... (x) sigma_{ik}.
inline HermitianMatrix pauli_string(std::span<const int> indices, int sign = 1) {
  if (indices.empty()) throw ArgumentError("empty Pauli string");
  if (sign != 1 && sign != -1) throw ArgumentError("Pauli string sign must be +1 or -1");
  ComplexMatrix m = pauli(indices[0]).matrix();
  for (std::size_t k = 1; k < indices.size(); ++k) m = kron(m, pauli(indices[k]).matrix());
  if (sign < 0) m *= -1.0;
  return HermitianMatrix::from_hermitian_part(m);
}

inline HermitianMatrix pauli_string(std::initializer_list<int> indices, int sign = 1) {
  return pauli_string(std::span<const int>(indices.begin(), indices.size()), sign);
}

/// r . sigma for a real 3-vector.
inline HermitianMatrix pauli_vector(double x, double y, double z) {
  return pauli(1) * x + pauli(2) * y + pauli(3) * z;
}

/// Generalized Gell-Mann basis of the n x n Hermitian matrices: for each
/// pair j < k the symmetric then antisymmetric element, then the n-1
/// diagonal elements, then the identity last.  Traceless elements have
/// HS norm sqrt(2); for n = 2 the order is sigma_x, sigma_y, sigma_z, I.
class HermitianBasis {
 public:
  explicit HermitianBasis(std::size_t n) : n_(n) {
    using namespace std::complex_literals;
    if (n < 1) throw ArgumentError("basis dimension must be positive");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        ComplexMatrix s(n), a(n);
        s(j, k) = 1.0;
        s(k, j) = 1.0;
        a(j, k) = -1i;
        a(k, j) = 1i;
        elements_.push_back(HermitianMatrix::from_hermitian_part(s));
        elements_.push_back(HermitianMatrix::from_hermitian_part(a));
      }
    for (std::size_t l = 1; l < n; ++l) {
      ComplexMatrix d(n);
      const double c = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
      for (std::size_t i = 0; i < l; ++i) d(i, i) = c;
      d(l, l) = -c * static_cast<double>(l);
      elements_.push_back(HermitianMatrix::from_hermitian_part(d));
    }
    elements_.push_back(HermitianMatrix::identity(n));
  }

  std::size_t algebra_dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t identity_index() const noexcept { return elements_.size() - 1; }
  const HermitianMatrix& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<HermitianMatrix>& elements() const noexcept { return elements_; }

  /// tr(B_i^2): 2 for traceless elements, n for the identity.
  double norm_squared(std::size_t i) const {
    return i == identity_index() ? static_cast<double>(n_) : 2.0;
  }

  /// Complex coordinates of an arbitrary matrix: a = sum_i c_i B_i.
  std::vector<cplx> coefficients(const ComplexMatrix& a) const {
    check(a);
    std::vector<cplx> c(size());
    for (std::size_t i = 0; i < size(); ++i) c[i] = hs_inner(elements_[i], a) / norm_squared(i);
    return c;
  }

  /// Real coordinates of a Hermitian matrix.
  std::vector<double> real_coefficients(const HermitianMatrix& h) const {
    check(h);
    std::vector<double> c(size());
    for (std::size_t i = 0; i < size(); ++i)
      c[i] = hs_inner(elements_[i], h).real() / norm_squared(i);
    return c;
  }

  HermitianMatrix reconstruct(std::span<const double> coeffs) const {
    if (coeffs.size() != size()) throw ArgumentError("coefficient count mismatch");
    HermitianMatrix r = HermitianMatrix::zero(n_);
    for (std::size_t i = 0; i < size(); ++i)
      if (coeffs[i] != 0.0) r += elements_[i] * coeffs[i];
    return r;
  }

 private:
  void check(const ComplexMatrix& a) const {
    if (a.dim() != n_) throw ArgumentError("matrix dimension does not match basis");
  }

  std::size_t n_;
  std::vector<HermitianMatrix> elements_;
};

}  // namespace specdist
