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
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "specdist/errors.hpp"
#include "specdist/hermitian.hpp"
#include "specdist/linalg.hpp"
#include "specdist/states.hpp"
#include "specdist/tolerances.hpp"
#include "specdist/triple.hpp"

namespace specdist {

struct SolverOptions {
  double tol = tol::kSolverDefault;  // absolute accuracy on the distance
  int max_bisection = 60;
  int inner_iters = 5000;  // Newton steps per bisection trial
  int restarts = 8;        // re-tries of an undecided trial from a random start
  std::uint64_t seed = 0;
  bool force_bisection = false;  // skip the closed form (cross-checking)

  void validate() const {
    if (!(tol > 0.0)) throw ArgumentError("solver tol must be positive");
    if (max_bisection < 1 || inner_iters < 1 || restarts < 1) {
      throw ArgumentError("solver iteration counts must be >= 1");
    }
  }
};

enum class Method { ClosedForm, Bisection, Oracle };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed_form";
    case Method::Bisection: return "bisection";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

struct SolverDiagnostics {
  int bisection_steps = 0;
  int newton_steps = 0;
  int restarts_used = 0;
  double lower = 0.0;  // certified bracket on the distance
  double upper = 0.0;
};

struct SolverResult {
  bool finite = true;
  double distance = 0.0;  // +infinity when !finite
  std::optional<HermitianMatrix> optimal_element;
  double seminorm_certificate = 0.0;   // L(e_o)
  double objective_certificate = 0.0;  // tr(delta e_o)
  Method method = Method::ClosedForm;
  SolverDiagnostics iterations;
};

namespace detail {

// [[0, C], [C^dagger, 0]]; its top eigenvalue is |C|_op.
inline ComplexMatrix dilation(const ComplexMatrix& c) {
  const std::size_t n = c.dim();
  ComplexMatrix h(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      h(i, n + j) = c(i, j);
      h(n + j, i) = std::conj(c(i, j));
    }
  return h;
}

// Minimizes L over the slice {e in V : tr(delta e) = s} with a log-barrier
// path-following method on the epigraph  t I - dil(C(e)) >= 0.
//
// The slice is parametrized as e(x) = (s/|g|) E0 + sum_i x_i B_i where E0 is
// the unit direction of delta inside V and B_i complete an orthonormal basis
// of V.  Every centered iterate gives
//   primal  L(e(x))                           (an upper bound on min L)
//   dual    t - (nu + (l + sqrt(nu)) l / (1 - l)) / tau    (a lower bound)
// with nu = 2N and l the Newton decrement.
class SliceBarrier {
 public:
  SliceBarrier(const SpectralTriple& t, const HermitianMatrix& delta) : triple_(t) {
    const auto& basis = t.search_basis();
    const std::size_t k = basis.size();
    std::vector<double> g(k);
    double gn = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      g[j] = hs_inner(basis[j], delta).real();
      gn += g[j] * g[j];
    }
    gnorm_ = std::sqrt(gn);
    if (gnorm_ == 0.0) return;

    // Orthonormal frame of R^k whose first vector is g / |g|.
    std::vector<std::vector<double>> frame{std::vector<double>(k)};
    for (std::size_t j = 0; j < k; ++j) frame[0][j] = g[j] / gnorm_;
    for (std::size_t c = 0; c < k && frame.size() < k; ++c) {
      std::vector<double> v(k, 0.0);
      v[c] = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& f : frame) {
          double dot = 0.0;
          for (std::size_t j = 0; j < k; ++j) dot += f[j] * v[j];
          for (std::size_t j = 0; j < k; ++j) v[j] -= dot * f[j];
        }
      double vn = 0.0;
      for (double x : v) vn += x * x;
      vn = std::sqrt(vn);
      if (vn < 1e-8) continue;
      for (double& x : v) x /= vn;
      frame.push_back(std::move(v));
    }

    auto combine = [&](const std::vector<double>& coeff) {
      HermitianMatrix m = HermitianMatrix::zero(t.algebra_dim());
      for (std::size_t j = 0; j < k; ++j) m += basis[j] * coeff[j];
      return m;
    };
    e0_ = combine(frame[0]);
    c0_ = t.commutator_with(e0_) * (1.0 / gnorm_);
    for (std::size_t i = 1; i < frame.size(); ++i) {
      directions_.push_back(combine(frame[i]));
      commutators_.push_back(t.commutator_with(directions_.back()));
      dilations_.push_back(dilation(commutators_.back()));
    }
    nu_ = 2.0 * static_cast<double>(t.hilbert_dim());
  }

  double gnorm() const noexcept { return gnorm_; }
  std::size_t free_dims() const noexcept { return directions_.size(); }
  const HermitianMatrix& unit_direction() const noexcept { return e0_; }

  HermitianMatrix element(double s, const std::vector<double>& x) const {
    HermitianMatrix e = e0_ * (s / gnorm_);
    for (std::size_t i = 0; i < x.size(); ++i) e += directions_[i] * x[i];
    return e;
  }

  ComplexMatrix commutator_at(double s, const std::vector<double>& x) const {
    ComplexMatrix c = c0_ * s;
    for (std::size_t i = 0; i < x.size(); ++i) c += commutators_[i] * x[i];
    return c;
  }

  struct Trial {
    double primal = std::numeric_limits<double>::infinity();  // L at x, upper bound
    double dual = 0.0;                                         // lower bound on min L
    std::vector<double> x;
    int newton_steps = 0;
    bool stalled = false;
  };

  // Runs path following until primal <= 1 (slice meets the unit ball),
  // dual > 1 (it does not), or the relative gap falls below `gap_target`.
  Trial run(double s, std::vector<double> x, double gap_target, int max_newton) const {
    Trial out;
    out.x = x;
    const std::size_t m = x.size();
    double t = operator_norm(commutator_at(s, x));
    t = 1.5 * t + 1e-3 * s;
    double tau = nu_ / t;

    auto barrier = [&](double tv, const std::vector<double>& xv, ComplexMatrix* inv) -> std::optional<double> {
      ComplexMatrix f = dilation(commutator_at(s, xv)) * -1.0;
      for (std::size_t i = 0; i < f.dim(); ++i) f(i, i) += tv;
      auto l = cholesky(f);
      if (!l) return std::nullopt;
      double logdet = 0.0;
      for (std::size_t i = 0; i < f.dim(); ++i) logdet += 2.0 * std::log((*l)(i, i).real());
      if (inv) *inv = cholesky_inverse(*l);
      return tau * tv - logdet;
    };

    const std::size_t dim = m + 1;
    while (true) {
      // Centering.
      double decrement = 1.0;
      for (int it = 0; it < 200; ++it) {
        if (out.newton_steps >= max_newton) {
          out.stalled = true;
          return finish(out, s, x, t, tau, decrement);
        }
        ++out.newton_steps;
        ComplexMatrix finv;
        auto fval = barrier(t, x, &finv);
        if (!fval) {
          out.stalled = true;
          return finish(out, s, x, t, tau, decrement);
        }
        std::vector<ComplexMatrix> gmat;  // F^{-1} A_a
        gmat.reserve(dim);
        gmat.push_back(finv);
        for (const auto& d : dilations_) gmat.push_back((finv * d) * -1.0);
        std::vector<double> grad(dim), hess(dim * dim);
        grad[0] = tau - finv.trace().real();
        for (std::size_t a = 1; a < dim; ++a) grad[a] = -gmat[a].trace().real();
        for (std::size_t a = 0; a < dim; ++a)
          for (std::size_t b = a; b < dim; ++b) {
            const double h = re_trace_product(gmat[a], gmat[b]);
            hess[a * dim + b] = h;
            hess[b * dim + a] = h;
          }
        std::vector<double> neg(dim);
        for (std::size_t a = 0; a < dim; ++a) neg[a] = -grad[a];
        std::vector<double> step;
        try {
          step = solve_real(hess, neg);
        } catch (const ArgumentError&) {
          out.stalled = true;
          return finish(out, s, x, t, tau, decrement);
        }
        double lam2 = 0.0;
        for (std::size_t a = 0; a < dim; ++a) lam2 -= grad[a] * step[a];
        decrement = std::sqrt(std::max(lam2, 0.0));
        if (lam2 <= 1e-14) break;
        double alpha = 1.0;
        bool moved = false;
        while (alpha > 1e-20) {
          const double tn = t + alpha * step[0];
          std::vector<double> xn(x);
          for (std::size_t i = 0; i < m; ++i) xn[i] += alpha * step[i + 1];
          auto fn = barrier(tn, xn, nullptr);
          if (fn && *fn <= *fval - 0.25 * alpha * lam2) {
            t = tn;
            x = std::move(xn);
            moved = true;
            break;
          }
          alpha *= 0.5;
        }
        if (!moved) break;
      }

      finish(out, s, x, t, tau, decrement);
      if (out.primal <= 1.0 || out.dual > 1.0) return out;
      if (out.primal - out.dual <= gap_target * out.primal) return out;
      tau *= 8.0;
    }
  }

 private:
  Trial& finish(Trial& out, double s, const std::vector<double>& x, double t, double tau,
                double decrement) const {
    const double primal = operator_norm(commutator_at(s, x));
    if (primal < out.primal) {
      out.primal = primal;
      out.x = x;
    }
    if (decrement < 1.0) {
      const double gap = (nu_ + (decrement + std::sqrt(nu_)) * decrement / (1.0 - decrement)) / tau;
      out.dual = std::max(out.dual, t - gap);
    }
    return out;
  }

  const SpectralTriple& triple_;
  double gnorm_ = 0.0;
  double nu_ = 0.0;
  HermitianMatrix e0_;
  ComplexMatrix c0_;
  std::vector<HermitianMatrix> directions_;
  std::vector<ComplexMatrix> commutators_;
  std::vector<ComplexMatrix> dilations_;
};

inline SolverResult finalize(const SpectralTriple& t, const HermitianMatrix& delta, HermitianMatrix e,
                             double distance, Method method) {
  SolverResult r;
  r.distance = distance;
  r.method = method;
  r.seminorm_certificate = lipschitz_seminorm(t, e);
  r.objective_certificate = hs_inner(delta, e).real();
  r.optimal_element = std::move(e);
  r.iterations.lower = distance;
  r.iterations.upper = distance;
  return r;
}

// Quasiconcave-ratio bisection: d* = sup_V tr(delta e) / L(e).  Trial value
// s is feasible iff the slice tr(delta e) = s meets {L <= 1}; each trial is
// decided by SliceBarrier and also tightens both ends of the bracket.
inline SolverResult general_distance(const SpectralTriple& t, const HermitianMatrix& delta,
                                     const SolverOptions& opts) {
  SliceBarrier slice(t, delta);
  if (slice.gnorm() <= 1e-14) {
    // The allowed elements cannot tell the states apart.
    SolverResult r;
    r.method = Method::Bisection;
    return r;
  }
  const HermitianMatrix& e0 = slice.unit_direction();
  const double l0 = lipschitz_seminorm(t, e0);
  double low = slice.gnorm() / l0;
  HermitianMatrix witness = e0 * (1.0 / l0);
  if (slice.free_dims() == 0) {
    return finalize(t, delta, witness, low, Method::Bisection);
  }

  double high = std::numeric_limits<double>::infinity();
  std::vector<double> x(slice.free_dims(), 0.0);
  double x_scale = low;  // slice value x was computed for
  Rng rng(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SolverDiagnostics diag;

  while (diag.bisection_steps < opts.max_bisection && !(high - low <= opts.tol)) {
    ++diag.bisection_steps;
    const double s = std::isinf(high) ? 2.0 * low : 0.5 * (low + high);
    for (double& v : x) v *= s / x_scale;
    x_scale = s;
    const double gap_target = 0.25 * opts.tol / low;
    SliceBarrier::Trial trial;
    for (int attempt = 0; attempt < opts.restarts; ++attempt) {
      std::vector<double> start = x;
      if (attempt > 0) {
        ++diag.restarts_used;
        for (double& v : start) v = s * normal(rng);
      }
      trial = slice.run(s, start, std::max(gap_target, 1e-13), opts.inner_iters);
      diag.newton_steps += trial.newton_steps;
      if (!trial.stalled) break;
    }
    if (std::isfinite(trial.primal) && trial.primal > 0.0 && s / trial.primal > low) {
      low = s / trial.primal;
      witness = slice.element(s, trial.x) * (1.0 / trial.primal);
      x = trial.x;
    }
    if (trial.dual > 0.0) high = std::min(high, s / trial.dual);
    if (high < low) high = low;  // rounding
  }

  diag.lower = low;
  diag.upper = high;
  if (!(high - low <= opts.tol)) {
    throw SolverError("distance bracket did not close within max_bisection", low, high);
  }
  SolverResult r = finalize(t, delta, std::move(witness), low, Method::Bisection);
  r.iterations = diag;
  return r;
}

}  // namespace detail

/// Distance from the state difference alone; see connes_distance.
inline SolverResult distance_from_difference(const SpectralTriple& t, const HermitianMatrix& delta,
                                             const SolverOptions& opts = {}) {
  opts.validate();
  if (delta.dim() != t.algebra_dim()) throw ArgumentError("state dimension does not match the algebra");
  if (delta.matrix().max_abs() <= tol::kEqualStates) return SolverResult{};

  if (!distance_is_finite(t, delta)) {
    SolverResult r;
    r.finite = false;
    r.distance = std::numeric_limits<double>::infinity();
    r.iterations.lower = r.iterations.upper = r.distance;
    return r;
  }

  const IsometricFlag flag = t.isometric_flag();
  if (!opts.force_bisection && flag != IsometricFlag::No &&
      (flag == IsometricFlag::OnAll || t.representation().is_unital())) {
    const HermitianMatrix visible = t.project_allowed(delta);
    HermitianMatrix eo = optimal_element_tracenorm(visible);
    // The trace-norm witness must itself be an element the isometry covers.
    const bool covered =
        (flag == IsometricFlag::OnAll || std::abs(eo.trace()) <= tol::kVerification) &&
        max_abs_diff(t.project_allowed(eo), eo) <= tol::kVerification;
    if (covered) {
      return detail::finalize(t, delta, std::move(eo), hermitian_trace_norm(visible), Method::ClosedForm);
    }
  }
  return detail::general_distance(t, delta, opts);
}

/// d(rho1, rho2) = sup { tr((rho1 - rho2) e) : |[D, pi(e)]|_op <= 1 }.
///
/// Equal states give 0; a kernel direction that sees the difference gives
/// +infinity; isometric triples use the trace-norm closed form; everything
/// else goes through the certified bisection, whose reported distance is
/// the lower end of a bracket of width <= opts.tol.
inline SolverResult connes_distance(const SpectralTriple& t, const DensityMatrix& rho1,
                                    const DensityMatrix& rho2, const SolverOptions& opts = {}) {
  if (rho1.dim() != t.algebra_dim() || rho2.dim() != t.algebra_dim()) {
    throw ArgumentError("state dimension does not match the algebra");
  }
  return distance_from_difference(t, state_difference(rho1, rho2), opts);
}

struct OptimalityReport {
  double seminorm = 0.0;
  double objective = 0.0;
  bool pass = false;
};

/// Checks the optimality contract L(e) = 1 and tr(delta e) = d, both
/// within tol.  When `distance` is omitted d is computed by
/// distance_from_difference.
inline OptimalityReport verify_optimal(const SpectralTriple& t, const HermitianMatrix& delta,
                                       const HermitianMatrix& e, double tolerance,
                                       std::optional<double> distance = std::nullopt) {
  OptimalityReport r;
  r.seminorm = lipschitz_seminorm(t, e);
  r.objective = hs_inner(delta, e).real();
  const double target = distance ? *distance : distance_from_difference(t, delta).distance;
  r.pass = std::abs(r.seminorm - 1.0) <= tolerance && std::abs(r.objective - target) <= tolerance;
  return r;
}

}  // namespace specdist
