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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specdist/errors.hpp"
#include "specdist/matrix.hpp"
#include "specdist/tolerances.hpp"

namespace specdist {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

namespace detail {

// Rotation that diagonalizes the 2x2 Hermitian block [[alpha, gamma],
// [conj(gamma), beta]].  Returned as (J_pp, J_pq, J_qp, J_qq).
struct Rotation {
  cplx pp, pq, qp, qq;
};

inline Rotation jacobi_rotation(double alpha, double beta, cplx gamma) {
  const double mag = std::abs(gamma);
  const cplx phase = gamma / mag;  // e^{i phi}
  const double zeta = (beta - alpha) / (2.0 * mag);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = c * t;
  const cplx conj_phase = std::conj(phase);
  return {c, s, -s * conj_phase, c * conj_phase};
}

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Cyclic complex Jacobi.  `a` must be Hermitian; only that is assumed.
inline EigenDecomposition jacobi_eigen(ComplexMatrix a) {
  const std::size_t n = a.dim();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();
  const double target = tol::kJacobiOff * scale;

  int sweep = 0;
  double off = off_diagonal_norm(a);
  while (off > target) {
    if (sweep++ >= tol::kJacobiMaxSweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge", off);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        if (std::abs(apq) == 0.0) continue;
        const Rotation r = jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * r.pp + akq * r.qp;
          a(k, q) = akp * r.pq + akq * r.qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(r.pp) * apk + std::conj(r.qp) * aqk;
          a(q, k) = std::conj(r.pq) * apk + std::conj(r.qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * r.pp + vkq * r.qp;
          v(k, q) = vkp * r.pq + vkq * r.qq;
        }
      }
    }
    off = off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace detail

/// Column-major rectangular matrix, used where the square ComplexMatrix
/// does not fit (the seminorm-kernel map).
struct ColumnMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> data;  // column j occupies [j*rows, (j+1)*rows)

  ColumnMatrix() = default;
  ColumnMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  cplx& operator()(std::size_t i, std::size_t j) { return data[j * rows + i]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data[j * rows + i]; }
};

struct SingularValueDecomposition {
  std::vector<double> values;  // descending
  ColumnMatrix right;          // cols x cols, column k pairs with values[k]
};

/// One-sided (Hestenes) Jacobi SVD.  Small singular values keep high
/// relative accuracy, which the kernel cut relies on.
inline SingularValueDecomposition jacobi_svd(ColumnMatrix a, bool want_right = true) {
  const std::size_t m = a.rows;
  const std::size_t n = a.cols;
  ColumnMatrix v(want_right ? n : 0, want_right ? n : 0);
  if (want_right)
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  constexpr double eps = 1e-15;
  // Columns this small relative to the whole matrix are rounding noise;
  // rotating them can chase eps forever.
  double total = 0.0;
  for (const auto& x : a.data) total += std::norm(x);
  const double negligible = 1e-30 * total;
  bool rotated = true;
  int sweep = 0;
  double residual = 0.0;
  while (rotated) {
    if (sweep++ >= tol::kJacobiMaxSweeps) {
      throw ConvergenceError("one-sided Jacobi SVD did not converge", residual);
    }
    rotated = false;
    residual = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma = 0.0;
        const cplx* cp = &a.data[p * m];
        const cplx* cq = &a.data[q * m];
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(cp[i]);
          beta += std::norm(cq[i]);
          gamma += std::conj(cp[i]) * cq[i];
        }
        if (alpha <= negligible || beta <= negligible) continue;
        const double rel = std::abs(gamma) / std::sqrt(alpha * beta);
        residual = std::max(residual, rel);
        if (rel <= eps) continue;
        rotated = true;
        const detail::Rotation r = detail::jacobi_rotation(alpha, beta, gamma);
        cplx* xp = &a.data[p * m];
        cplx* xq = &a.data[q * m];
        for (std::size_t i = 0; i < m; ++i) {
          const cplx u = xp[i];
          const cplx w = xq[i];
          xp[i] = u * r.pp + w * r.qp;
          xq[i] = u * r.pq + w * r.qq;
        }
        if (want_right) {
          for (std::size_t i = 0; i < n; ++i) {
            const cplx u = v(i, p);
            const cplx w = v(i, q);
            v(i, p) = u * r.pp + w * r.qp;
            v(i, q) = u * r.pq + w * r.qq;
          }
        }
      }
    }
  }

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += std::norm(a(i, j));
    norms[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return norms[i] > norms[j]; });

  SingularValueDecomposition out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = norms[order[k]];
  if (want_right) {
    out.right = ColumnMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out.right(i, k) = v(i, order[k]);
  }
  return out;
}

/// Singular values of a square matrix, descending.
inline std::vector<double> singular_values(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ColumnMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = a(i, j);
  return jacobi_svd(std::move(c), false).values;
}

/// Largest singular value.
inline double operator_norm(const ComplexMatrix& a) {
  if (a.empty()) return 0.0;
  return singular_values(a).front();
}

/// Sum of singular values.
inline double trace_norm(const ComplexMatrix& a) {
  const auto s = singular_values(a);
  return std::accumulate(s.begin(), s.end(), 0.0);
}

/// Lower-triangular L with L L^dagger = A, or nullopt when A is not
/// (numerically) positive definite.
inline std::optional<ComplexMatrix> cholesky(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) return std::nullopt;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return l;
}

/// Inverse of a Hermitian positive definite matrix from its Cholesky factor.
inline ComplexMatrix cholesky_inverse(const ComplexMatrix& l) {
  const std::size_t n = l.dim();
  // Invert L (lower triangular), then A^{-1} = L^{-dagger} L^{-1}.
  ComplexMatrix linv(n);
  for (std::size_t j = 0; j < n; ++j) {
    linv(j, j) = 1.0 / l(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = 0.0;
      for (std::size_t k = j; k < i; ++k) s += l(i, k) * linv(k, j);
      linv(i, j) = -s / l(i, i);
    }
  }
  ComplexMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      cplx s = 0.0;
      for (std::size_t k = i; k < n; ++k) s += std::conj(linv(k, i)) * linv(k, j);
      inv(i, j) = s;
      inv(j, i) = std::conj(s);
    }
  return inv;
}

/// Solves the dense real system A x = b by Gaussian elimination with
/// partial pivoting; A is row-major n x n.  Throws ArgumentError if singular.
inline std::vector<double> solve_real(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  if (a.size() != n * n) throw ArgumentError("solve_real: shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0.0) throw ArgumentError("solve_real: singular system");
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      std::swap(b[c], b[piv]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * x[k];
    x[i] = s / a[i * n + i];
  }
  return x;
}

}  // namespace specdist
