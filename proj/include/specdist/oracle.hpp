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
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "specdist/errors.hpp"
#include "specdist/pauli.hpp"
#include "specdist/states.hpp"
#include "specdist/triple.hpp"

namespace specdist {

// Brute-force ground truth for qubit algebras.  It deliberately shares no
// code with the solver beyond lipschitz_seminorm: the search space is built
// from the Pauli directions directly, not from the triple's kernel analysis.

namespace detail {

struct OracleSpace {
  std::vector<HermitianMatrix> directions;  // HS-orthonormal
};

inline OracleSpace oracle_space(const SpectralTriple& t) {
  const HermitianBasis basis(2);
  OracleSpace space;
  const auto& mask = t.subalgebra_mask();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!mask.empty() && std::find(mask.begin(), mask.end(), i) == mask.end()) continue;
    if (i == basis.identity_index() && t.representation().is_unital()) continue;
    space.directions.push_back(basis[i] * (1.0 / std::sqrt(2.0)));
  }
  return space;
}

class RatioFunction {
 public:
  RatioFunction(const SpectralTriple& t, const HermitianMatrix& delta, const OracleSpace& space)
      : t_(t), delta_(delta), space_(space) {}

  // tr(delta e) / L(e) for e = sum v_i d_i; -inf where undefined (0 / 0).
  double operator()(std::span<const double> v) const {
    HermitianMatrix e = HermitianMatrix::zero(2);
    for (std::size_t i = 0; i < v.size(); ++i) e += space_.directions[i] * v[i];
    const double num = hs_inner(delta_, e).real();
    const double den = lipschitz_seminorm(t_, e);
    double scale = 0.0;
    for (double c : v) scale = std::max(scale, std::abs(c));
    if (den <= 1e-12 * scale) {
      if (std::abs(num) > tol::kFiniteness * scale) unbounded_ = true;
      return -std::numeric_limits<double>::infinity();
    }
    return num / den;
  }

  bool unbounded() const noexcept { return unbounded_; }

 private:
  const SpectralTriple& t_;
  const HermitianMatrix& delta_;
  const OracleSpace& space_;
  mutable bool unbounded_ = false;
};

// Golden-section maximization of f(center + lambda dir), lambda in [-w, w].
template <class F>
double golden_line(F&& f, std::array<double, 3>& center, const std::array<double, 3>& dir, double w,
                   std::size_t dims, double best) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto at = [&](double lambda) {
    std::array<double, 3> p{};
    for (std::size_t i = 0; i < dims; ++i) p[i] = center[i] + lambda * dir[i];
    return f(std::span<const double>(p.data(), dims));
  };
  double a = -w, b = w;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = at(c), fd = at(d);
  for (int it = 0; it < 40; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = at(d);
    }
  }
  const double lambda = fc >= fd ? c : d;
  const double value = std::max(fc, fd);
  if (value > best) {
    for (std::size_t i = 0; i < dims; ++i) center[i] += lambda * dir[i];
    return value;
  }
  return best;
}

}  // namespace detail

/// Lower bound on d(rho1, rho2) for M_2(C) triples: maximize tr(delta e) / L(e)
/// over `grid` directions (a circle for 2 search dimensions, a Fibonacci
/// sphere for 3), then refine around the best direction with golden-section
/// line searches over an ever smaller patch.  Throws CapacityError unless
/// the algebra is M_2(C) with at most 3 search dimensions.
inline double oracle_distance(const SpectralTriple& t, const DensityMatrix& rho1, const DensityMatrix& rho2,
                              int grid) {
  if (t.algebra_dim() != 2) throw CapacityError("the oracle supports 2x2 algebras only");
  if (grid < 1) throw ArgumentError("oracle grid must be positive");
  const HermitianMatrix delta = state_difference(rho1, rho2);
  if (delta.matrix().max_abs() <= tol::kEqualStates) return 0.0;
  const detail::OracleSpace space = detail::oracle_space(t);
  const std::size_t dims = space.directions.size();
  if (dims > 3) throw CapacityError("oracle search space exceeds 3 dimensions");
  if (dims == 0) return 0.0;
  detail::RatioFunction ratio(t, delta, space);

  std::array<double, 3> best_point{};
  double best = -std::numeric_limits<double>::infinity();
  auto consider = [&](const std::array<double, 3>& p) {
    const double r = ratio(std::span<const double>(p.data(), dims));
    if (r > best) {
      best = r;
      best_point = p;
    }
  };

  // The coordinate axes are probed exactly so that axis-aligned null
  // directions of L register as unbounded.
  for (std::size_t i = 0; i < dims; ++i) {
    std::array<double, 3> p{};
    p[i] = 1.0;
    consider(p);
    p[i] = -1.0;
    consider(p);
  }

  const double pi = std::numbers::pi;
  double spacing = 0.0;
  if (dims == 2) {
    for (int k = 0; k < grid; ++k) {
      const double a = 2.0 * pi * k / grid;
      consider({std::cos(a), std::sin(a), 0.0});
    }
    spacing = 2.0 * pi / grid;
  } else if (dims == 3) {
    const double golden_angle = pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < grid; ++k) {
      const double z = 1.0 - 2.0 * (k + 0.5) / grid;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = golden_angle * k;
      consider({r * std::cos(a), r * std::sin(a), z});
    }
    spacing = std::sqrt(4.0 * pi / grid);
  }
  if (ratio.unbounded()) return std::numeric_limits<double>::infinity();
  if (dims == 1) return std::max(best, 0.0);

  // Local refinement.  The ratio is quasiconcave where it is positive, so
  // it is unimodal along every line of the patch.
  double w = 2.0 * spacing;
  std::array<double, 3> center = best_point;
  for (int round = 0; round < 40; ++round) {
    double norm = 0.0;
    for (std::size_t i = 0; i < dims; ++i) norm += center[i] * center[i];
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < dims; ++i) center[i] /= norm;
    // Tangent frame at the current center.
    std::array<double, 3> ta{}, tb{};
    if (dims == 2) {
      ta = {-center[1], center[0], 0.0};
    } else {
      const std::size_t least = std::abs(center[0]) <= std::abs(center[1])
                                    ? (std::abs(center[0]) <= std::abs(center[2]) ? 0 : 2)
                                    : (std::abs(center[1]) <= std::abs(center[2]) ? 1 : 2);
      std::array<double, 3> axis{};
      axis[least] = 1.0;
      ta = {center[1] * axis[2] - center[2] * axis[1], center[2] * axis[0] - center[0] * axis[2],
            center[0] * axis[1] - center[1] * axis[0]};
      const double tn = std::sqrt(ta[0] * ta[0] + ta[1] * ta[1] + ta[2] * ta[2]);
      for (double& c : ta) c /= tn;
      tb = {center[1] * ta[2] - center[2] * ta[1], center[2] * ta[0] - center[0] * ta[2],
            center[0] * ta[1] - center[1] * ta[0]};
    }
    const int directions = dims == 2 ? 1 : 8;
    for (int k = 0; k < directions; ++k) {
      const double a = pi * k / directions + 0.618 * round;
      std::array<double, 3> dir = ta;
      if (dims == 3)
        for (std::size_t i = 0; i < 3; ++i) dir[i] = std::cos(a) * ta[i] + std::sin(a) * tb[i];
      best = detail::golden_line(ratio, center, dir, w, dims, best);
    }
    w *= 0.7;
  }
  return std::max(best, 0.0);
}

}  // namespace specdist
