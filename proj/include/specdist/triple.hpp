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
#include <limits>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specdist/errors.hpp"
#include "specdist/hermitian.hpp"
#include "specdist/linalg.hpp"
#include "specdist/matrix.hpp"
#include "specdist/pauli.hpp"
#include "specdist/random.hpp"
#include "specdist/tolerances.hpp"

namespace specdist {

enum class RepresentationKind { Identity, Diagonal, Corner, Custom };

inline const char* to_string(RepresentationKind k) {
  switch (k) {
    case RepresentationKind::Identity: return "identity";
    case RepresentationKind::Diagonal: return "diagonal";
    case RepresentationKind::Corner: return "corner";
    case RepresentationKind::Custom: return "custom";
  }
  return "?";
}

/// Linear map pi from M_n(C) into L(C^N).
///
///   Identity        pi(a) = a                      N = n
///   Diagonal(m)     pi(a) = I_m (x) a              N = m n
///   Corner          pi(a) = [[a, 0], [0, 0]]       N = 2 n
///   Custom          pi(B_i) = images[i] for the HermitianBasis B_i of
///                   M_n(C), extended complex-linearly.
class Representation {
 public:
  static Representation identity(std::size_t n) {
    return Representation(RepresentationKind::Identity, n, 1, n);
  }

  static Representation diagonal(std::size_t n, std::size_t copies) {
    if (copies < 1) throw ArgumentError("diagonal representation needs at least one copy");
    return Representation(RepresentationKind::Diagonal, n, copies, n * copies);
  }

  static Representation corner(std::size_t n) {
    return Representation(RepresentationKind::Corner, n, 1, 2 * n);
  }

  static Representation custom(std::size_t n, std::vector<ComplexMatrix> images) {
    if (images.size() != n * n) throw ArgumentError("custom representation needs n^2 basis images");
    const std::size_t hilbert = images.front().dim();
    if (hilbert == 0) throw ArgumentError("custom representation images are empty");
    for (const auto& m : images) {
      if (m.dim() != hilbert) throw ArgumentError("custom representation images differ in size");
      m.require_finite();
    }
    Representation r(RepresentationKind::Custom, n, 1, hilbert);
    r.images_ = std::move(images);
    return r;
  }

  RepresentationKind kind() const noexcept { return kind_; }
  std::size_t algebra_dim() const noexcept { return n_; }
  std::size_t hilbert_dim() const noexcept { return hilbert_; }
  std::size_t copies() const noexcept { return copies_; }
  const std::vector<ComplexMatrix>& basis_images() const noexcept { return images_; }

  ComplexMatrix apply(const ComplexMatrix& a) const {
    if (a.dim() != n_) throw ArgumentError("element dimension does not match the algebra");
    switch (kind_) {
      case RepresentationKind::Identity: return a;
      case RepresentationKind::Diagonal: return kron(ComplexMatrix::identity(copies_), a);
      case RepresentationKind::Corner: {
        ComplexMatrix r(hilbert_);
        for (std::size_t i = 0; i < n_; ++i)
          for (std::size_t j = 0; j < n_; ++j) r(i, j) = a(i, j);
        return r;
      }
      case RepresentationKind::Custom: {
        const HermitianBasis basis(n_);
        const auto c = basis.coefficients(a);
        ComplexMatrix r(hilbert_);
        for (std::size_t i = 0; i < c.size(); ++i)
          if (c[i] != cplx{}) r += images_[i] * c[i];
        return r;
      }
    }
    return {};
  }

  /// pi(I_n) == I_N within construction tolerance.
  bool is_unital() const {
    switch (kind_) {
      case RepresentationKind::Identity:
      case RepresentationKind::Diagonal: return true;
      case RepresentationKind::Corner: return false;
      case RepresentationKind::Custom:
        return max_abs_diff(images_.back(), ComplexMatrix::identity(hilbert_)) <= tol::kConstruction;
    }
    return false;
  }

 private:
  Representation(RepresentationKind k, std::size_t n, std::size_t copies, std::size_t hilbert)
      : kind_(k), n_(n), copies_(copies), hilbert_(hilbert) {
    if (n < 1) throw ArgumentError("algebra dimension must be positive");
  }

  RepresentationKind kind_;
  std::size_t n_;
  std::size_t copies_;
  std::size_t hilbert_;
  std::vector<ComplexMatrix> images_;
};

/// Whether L(e) = |e|_op is known to hold, and on which elements.
enum class IsometricFlag { No, OnTraceless, OnAll };

inline const char* to_string(IsometricFlag f) {
  switch (f) {
    case IsometricFlag::No: return "no";
    case IsometricFlag::OnTraceless: return "on_traceless";
    case IsometricFlag::OnAll: return "on_all";
  }
  return "?";
}

/// One term coeff * left (x) right of a Dirac operator given as a sum of
/// tensor products.  `right` acts on the factor the algebra lives on.
struct DiracTerm {
  double coeff = 1.0;
  ComplexMatrix left;
  ComplexMatrix right;
};

inline ComplexMatrix sum_terms(const std::vector<DiracTerm>& terms) {
  ComplexMatrix d;
  for (const auto& t : terms) {
    ComplexMatrix k = kron(t.left, t.right) * t.coeff;
    if (d.empty()) d = std::move(k);
    else d += k;
  }
  return d;
}

/// Immutable finite spectral triple.  The Dirac operator is stored traceless
/// (D - tr(D)/N I); the seminorm kernel and the solver's search space are
/// computed once at construction.
class SpectralTriple {
 public:
  /// `mask` lists the HermitianBasis directions the algebra is restricted
  /// to (empty: all of M_n(C)).  `terms`, when given, must sum to `dirac`.
  SpectralTriple(Representation rep, const ComplexMatrix& dirac, std::string tag,
                 IsometricFlag flag = IsometricFlag::No, std::vector<std::size_t> mask = {},
                 std::vector<DiracTerm> terms = {})
      : rep_(std::move(rep)),
        dirac_(normalize(dirac, rep_)),
        tag_(std::move(tag)),
        flag_(flag),
        mask_(std::move(mask)),
        terms_(std::move(terms)) {
    const HermitianBasis basis(rep_.algebra_dim());
    std::sort(mask_.begin(), mask_.end());
    mask_.erase(std::unique(mask_.begin(), mask_.end()), mask_.end());
    for (auto i : mask_)
      if (i >= basis.size()) throw ArgumentError("subalgebra mask index out of range");
    analyze(basis);
  }

  const Representation& representation() const noexcept { return rep_; }
  const HermitianMatrix& dirac() const noexcept { return dirac_; }
  const std::string& tag() const noexcept { return tag_; }
  IsometricFlag isometric_flag() const noexcept { return flag_; }
  const std::vector<std::size_t>& subalgebra_mask() const noexcept { return mask_; }
  bool restricted() const noexcept { return !mask_.empty(); }
  const std::vector<DiracTerm>& terms() const noexcept { return terms_; }
  std::size_t algebra_dim() const noexcept { return rep_.algebra_dim(); }
  std::size_t hilbert_dim() const noexcept { return rep_.hilbert_dim(); }

  /// HS-orthonormal basis of {e Hermitian, e allowed : [D, pi(e)] = 0}.
  const std::vector<HermitianMatrix>& kernel() const noexcept { return kernel_; }
  /// HS-orthonormal basis of the allowed Hermitian elements orthogonal to
  /// the kernel.  For unital representations the identity is in the
  /// kernel, so these are traceless.
  const std::vector<HermitianMatrix>& search_basis() const noexcept { return search_; }
  /// HS-orthonormal basis of the allowed Hermitian elements.
  const std::vector<HermitianMatrix>& allowed_basis() const noexcept { return allowed_; }

  /// [D, pi(e)].
  ComplexMatrix commutator_with(const ComplexMatrix& e) const {
    return commutator(dirac_.matrix(), rep_.apply(e));
  }

  /// HS-orthogonal projection of a Hermitian matrix onto the allowed span.
  HermitianMatrix project_allowed(const HermitianMatrix& h) const {
    if (!restricted()) return h;
    HermitianMatrix r = HermitianMatrix::zero(h.dim());
    for (const auto& a : allowed_) r += a * hs_inner(a, h).real();
    return r;
  }

  SpectralTriple with_isometric_flag(IsometricFlag flag) const {
    SpectralTriple t = *this;
    t.flag_ = flag;
    return t;
  }

 private:
  static HermitianMatrix normalize(const ComplexMatrix& d, const Representation& rep) {
    if (d.dim() != rep.hilbert_dim()) {
      throw ArgumentError("Dirac operator size does not match the Hilbert space");
    }
    HermitianMatrix h(d);
    const double shift = h.trace() / static_cast<double>(h.dim());
    // Shifts at rounding level are skipped so that normalizing twice is a
    // no-op (stored descriptions re-load bit-identically).
    const double noise = 8.0 * std::numeric_limits<double>::epsilon() * h.matrix().max_abs();
    if (std::abs(shift) > noise) h -= HermitianMatrix::identity(h.dim()) * shift;
    return h;
  }

  void analyze(const HermitianBasis& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (restricted() && !std::binary_search(mask_.begin(), mask_.end(), i)) continue;
      allowed_.push_back(basis[i] * (1.0 / std::sqrt(basis.norm_squared(i))));
    }
    const std::size_t d = allowed_.size();
    const std::size_t n2 = hilbert_dim() * hilbert_dim();
    ColumnMatrix map(2 * n2, d);
    for (std::size_t j = 0; j < d; ++j) {
      const ComplexMatrix c = commutator_with(allowed_[j]);
      auto e = c.entries();
      for (std::size_t k = 0; k < n2; ++k) {
        map(2 * k, j) = e[k].real();
        map(2 * k + 1, j) = e[k].imag();
      }
    }
    const auto svd = jacobi_svd(std::move(map));
    const double cut = tol::kKernelRelative * (svd.values.empty() ? 0.0 : svd.values.front());
    for (std::size_t k = 0; k < d; ++k) {
      HermitianMatrix v = HermitianMatrix::zero(algebra_dim());
      for (std::size_t j = 0; j < d; ++j) v += allowed_[j] * svd.right(j, k).real();
      (svd.values[k] <= cut ? kernel_ : search_).push_back(std::move(v));
    }
  }

  Representation rep_;
  HermitianMatrix dirac_;
  std::string tag_;
  IsometricFlag flag_;
  std::vector<std::size_t> mask_;
  std::vector<DiracTerm> terms_;
  std::vector<HermitianMatrix> allowed_;
  std::vector<HermitianMatrix> kernel_;
  std::vector<HermitianMatrix> search_;
};

/// L(e) = |[D, pi(e)]|_op.
inline double lipschitz_seminorm(const SpectralTriple& t, const ComplexMatrix& e) {
  if (e.dim() != t.algebra_dim()) throw ArgumentError("element dimension does not match the algebra");
  return operator_norm(t.commutator_with(e));
}

/// L(e) for a raw (not normalized) Dirac matrix.
inline double lipschitz_seminorm(const Representation& rep, const ComplexMatrix& dirac,
                                 const ComplexMatrix& e) {
  if (dirac.dim() != rep.hilbert_dim()) throw ArgumentError("Dirac operator size mismatch");
  return operator_norm(commutator(dirac, rep.apply(e)));
}

inline const std::vector<HermitianMatrix>& seminorm_kernel(const SpectralTriple& t) {
  return t.kernel();
}

/// False iff a kernel direction k sees the state difference, |tr(delta k)|
/// > 1e-9: scaling k then drives the objective to infinity.
inline bool distance_is_finite(const SpectralTriple& t, const HermitianMatrix& delta) {
  if (delta.dim() != t.algebra_dim()) throw ArgumentError("state dimension does not match the algebra");
  for (const auto& k : t.kernel())
    if (std::abs(hs_inner(k, delta).real()) > tol::kFiniteness) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Constructors

/// Diagonal 2x2 algebra on C^2 with D = sigma_x / 2.  The algebra is
/// modeled as M_2(C) restricted to span{sigma_z, I}.
inline SpectralTriple dirac_two_point() {
  return SpectralTriple(Representation::identity(2), pauli(1) * 0.5, "two_point",
                        IsometricFlag::OnTraceless, {2, 3});
}

/// pi(a) = [[a, 0], [0, 0]] on C^n (+) C^n with D = [[0, I], [I, 0]];
/// L(e) = |e|_op for every e.
inline SpectralTriple dirac_corner(std::size_t n) {
  if (n < 1) throw ArgumentError("corner construction needs n >= 1");
  ComplexMatrix d(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    d(i, n + i) = 1.0;
    d(n + i, i) = 1.0;
  }
  return SpectralTriple(Representation::corner(n), d, "corner", IsometricFlag::OnAll);
}

namespace detail {
inline void require_permutation(const std::array<int, 3>& p) {
  std::array<int, 3> s = p;
  std::sort(s.begin(), s.end());
  if (s != std::array<int, 3>{1, 2, 3}) throw ArgumentError("expected a permutation of {1, 2, 3}");
}
inline void require_signs(const std::array<int, 3>& s) {
  for (int v : s)
    if (v != 1 && v != -1) throw ArgumentError("signs must be +1 or -1");
}
}  // namespace detail

/// D = 1/4 sum_i signs[i] sigma_i (x) sigma_{perm[i]} with pi(a) = I_2 (x) a.
/// The defaults give D_4 = 1/4 sum_i sigma_i (x) sigma_i.
inline SpectralTriple dirac_d4(std::array<int, 3> signs = {1, 1, 1},
                               std::array<int, 3> perm = {1, 2, 3}) {
  detail::require_signs(signs);
  detail::require_permutation(perm);
  std::vector<DiracTerm> terms;
  for (int i = 0; i < 3; ++i)
    terms.push_back({0.25 * signs[i], pauli(i + 1).matrix(), pauli(perm[i]).matrix()});
  const ComplexMatrix d = sum_terms(terms);
  return SpectralTriple(Representation::diagonal(2, 2), d, "d4",
                        IsometricFlag::OnTraceless, {}, std::move(terms));
}

/// One tensor level sigma_{left[i]} (x) sigma_{right[i]} with sign signs[i].
struct D4Level {
  std::array<int, 3> left{1, 2, 3};
  std::array<int, 3> right{1, 2, 3};
  std::array<int, 3> signs{1, 1, 1};
};

/// D = 1/4 sum_i L_n(i) (x) ... (x) L_1(i), L_k(i) = s_k,i sigma_{l_k(i)} (x)
/// sigma_{r_k(i)}, on C^{4^n} with pi(e) = I_{4^{n-1}} (x) I_2 (x) e.
/// levels[0] is L_1, the innermost factor.
inline SpectralTriple dirac_d4n(const std::vector<D4Level>& levels) {
  if (levels.empty()) throw ArgumentError("d4n needs at least one level");
  if (levels.size() >= 4) {
    throw CapacityError("d4n is capped at n <= 3 (Hilbert dimension 64)");
  }
  for (const auto& l : levels) {
    detail::require_permutation(l.left);
    detail::require_permutation(l.right);
    detail::require_signs(l.signs);
  }
  std::vector<DiracTerm> terms;
  for (int i = 0; i < 3; ++i) {
    double coeff = 0.25;
    ComplexMatrix left;  // everything except the innermost right factor
    for (std::size_t k = levels.size(); k-- > 0;) {
      const D4Level& l = levels[k];
      coeff *= l.signs[i];
      ComplexMatrix factor = pauli(l.left[i]).matrix();
      if (k > 0) factor = kron(factor, pauli(l.right[i]).matrix());
      left = left.empty() ? factor : kron(left, factor);
    }
    terms.push_back({coeff, std::move(left), pauli(levels[0].right[i]).matrix()});
  }
  const std::size_t copies = terms.front().left.dim();
  const ComplexMatrix d = sum_terms(terms);
  return SpectralTriple(Representation::diagonal(2, copies), d, "d4n",
                        IsometricFlag::OnTraceless, {}, std::move(terms));
}

/// D' = sum coeff S (x) M~ (x) T with M~ = M / |M|_op and pi'(a) = I_{mn} (x) a.
/// The base must be a Diagonal-representation triple carrying its term list.
inline SpectralTriple dirac_tensor_insert(const SpectralTriple& base, const HermitianMatrix& m) {
  if (base.terms().empty()) throw ArgumentError("tensor insertion needs a base given as a term list");
  if (base.representation().kind() != RepresentationKind::Diagonal) {
    throw ArgumentError("tensor insertion needs a diagonal representation");
  }
  const double norm = operator_norm(m.matrix());
  if (norm == 0.0) throw ArgumentError("inserted matrix M must be nonzero");
  const ComplexMatrix mt = m.matrix() * (1.0 / norm);
  const std::size_t n = base.algebra_dim();
  std::vector<DiracTerm> terms;
  for (const auto& t : base.terms()) {
    if (t.right.dim() % n != 0) throw ArgumentError("right tensor factor must act on the algebra factor");
    terms.push_back({t.coeff, kron(t.left, mt), t.right});
  }
  const std::size_t hilbert = terms.front().left.dim() * terms.front().right.dim();
  const ComplexMatrix d = sum_terms(terms);
  return SpectralTriple(Representation::diagonal(n, hilbert / n), d,
                        base.tag() + "+insert", base.isometric_flag(), base.subalgebra_mask(),
                        std::move(terms));
}

struct PermutationUnitaries {
  ComplexMatrix plus;   // sigma_x -> sigma_y -> sigma_z -> sigma_x
  ComplexMatrix minus;  // sigma_z -> sigma_y -> sigma_x -> sigma_z
};

inline PermutationUnitaries permutation_unitaries() {
  using namespace std::complex_literals;
  return {ComplexMatrix{{0.5 * (1.0 - 1i), 0.5 * (-1.0 - 1i)}, {0.5 * (1.0 - 1i), 0.5 * (1.0 + 1i)}},
          ComplexMatrix{{0.5 * (1.0 + 1i), 0.5 * (1.0 + 1i)}, {0.5 * (-1.0 + 1i), 0.5 * (1.0 - 1i)}}};
}

/// Same representation, D' = pi(U) D pi(U^dagger).  L'(e) = L(U^dagger e U),
/// so isometry flags carry over.
inline SpectralTriple conjugate_dirac(const SpectralTriple& t, const ComplexMatrix& u) {
  if (!t.representation().is_unital()) {
    throw ContractError("Dirac conjugation needs a unital representation");
  }
  if (u.dim() != t.algebra_dim() || !is_unitary(u)) throw ArgumentError("U must be a unitary of the algebra");
  const ComplexMatrix pu = t.representation().apply(u);
  const ComplexMatrix d = pu * t.dirac().matrix() * pu.adjoint();
  std::vector<DiracTerm> terms;
  if (t.representation().kind() == RepresentationKind::Diagonal) {
    for (const auto& term : t.terms()) {
      if (term.right.dim() != u.dim()) {
        terms.clear();
        break;
      }
      terms.push_back({term.coeff, term.left, u * term.right * u.adjoint()});
    }
  }
  // A subalgebra need not be stable under U, so the flag is only kept for
  // the full algebra.
  const IsometricFlag flag = t.restricted() ? IsometricFlag::No : t.isometric_flag();
  return SpectralTriple(t.representation(), d, t.tag() + "+conj", flag, t.subalgebra_mask(),
                        std::move(terms));
}

namespace detail {
/// Random Hermitian element in the allowed span; traceless directions only
/// when `traceless`.
inline HermitianMatrix random_allowed_element(const SpectralTriple& t, bool traceless, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const HermitianBasis basis(t.algebra_dim());
  std::vector<double> c(basis.size(), 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (t.restricted() && !std::binary_search(t.subalgebra_mask().begin(), t.subalgebra_mask().end(), i))
      continue;
    if (traceless && i == basis.identity_index()) continue;
    c[i] = normal(rng);
  }
  return basis.reconstruct(c);
}
}  // namespace detail

/// Randomized isometry certification: OnAll if 200 random Hermitian and
/// complex elements satisfy |L(e) - |e|_op| <= 1e-9 (1 + |e|_op), else
/// OnTraceless if traceless probes do, else No.
inline IsometricFlag certify_isometry(const SpectralTriple& t, std::uint64_t seed, int probes = 200) {
  Rng rng(seed);
  auto holds = [&](const ComplexMatrix& e) {
    const double ne = operator_norm(e);
    return std::abs(lipschitz_seminorm(t, e) - ne) <= tol::kExactSuite * (1.0 + ne);
  };
  bool all = true;
  for (int k = 0; k < probes && all; ++k) {
    all = holds(detail::random_allowed_element(t, false, rng));
    if (all && !t.restricted()) {
      const HermitianMatrix re = random_hermitian(t.algebra_dim(), rng);
      const HermitianMatrix im = random_hermitian(t.algebra_dim(), rng);
      all = holds(re.matrix() + im.matrix() * cplx(0.0, 1.0));
    }
  }
  if (all) return IsometricFlag::OnAll;
  for (int k = 0; k < probes; ++k)
    if (!holds(detail::random_allowed_element(t, true, rng))) return IsometricFlag::No;
  return IsometricFlag::OnTraceless;
}

}  // namespace specdist
