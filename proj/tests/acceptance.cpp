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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or exceeds its time budget.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "specdist/oracle.hpp"
#include "specdist/pauli.hpp"
#include "specdist/random.hpp"
#include "specdist/solver.hpp"
#include "specdist/states.hpp"
#include "specdist/triple.hpp"

using namespace specdist;

namespace {

struct Outcome {
  bool ok = true;
  double worst = 0.0;  // largest observed deviation
  double tolerance = 0.0;
  std::string note;

  void observe(double deviation) {
    if (!(deviation <= tolerance)) ok = false;
    if (!(deviation <= worst)) worst = deviation;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) {
      ok = false;
      if (note.empty()) note = why;
    }
  }
};

BlochVector random_bloch(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double x = g(rng), y = g(rng), z = g(rng);
  const double n = std::sqrt(x * x + y * y + z * z);
  // one in four pure
  const double len = u(rng) < 0.25 ? 1.0 : std::cbrt(u(rng));
  return BlochVector(x * len / n, y * len / n, z * len / n);
}

double distance_of(const SpectralTriple& t, const DensityMatrix& a, const DensityMatrix& b, const SolverOptions& o) {
  return connes_distance(t, a, b, o).distance;
}

SolverOptions forced_bisection() {
  SolverOptions o;
  o.force_bisection = true;
  return o;
}

DensityMatrix conjugated(const ComplexMatrix& u, const DensityMatrix& r) {
  return DensityMatrix(conjugate(u, r.hermitian()));
}

// 1
Outcome two_point_grid() {
  Outcome out{true, 0.0, 1e-9, ""};
  const SpectralTriple t = dirac_two_point();
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const double p = i / 20.0, q = j / 20.0;
      const DensityMatrix a(ComplexMatrix::diagonal({p, 1 - p})), b(ComplexMatrix::diagonal({q, 1 - q}));
      out.observe(std::abs(distance_of(t, a, b, {}) - 2 * std::abs(p - q)));
    }
  return out;
}

// 2
Outcome corner_isometry() {
  Outcome out{true, 0.0, 1e-10, ""};
  Rng rng(2002);
  for (std::size_t n : {2u, 3u, 4u}) {
    const SpectralTriple t = dirac_corner(n);
    for (int k = 0; k < 200; ++k) {
      const ComplexMatrix e = random_hermitian(n, rng).matrix() + random_hermitian(n, rng).matrix() * cplx(0, 1);
      out.observe(std::abs(lipschitz_seminorm(t, e) - operator_norm(e)));
    }
  }
  return out;
}

// 3
Outcome d4_bloch() {
  Outcome out{true, 0.0, 1e-5, ""};
  Rng rng(3003);
  const SpectralTriple t = dirac_d4();
  double closed_worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const BlochVector r1 = random_bloch(rng), r2 = random_bloch(rng);
    const DensityMatrix a = density_from_bloch(r1), b = density_from_bloch(r2);
    const double want = distance(r1, r2);
    const SolverResult c = connes_distance(t, a, b);
    out.require(c.method == Method::ClosedForm, "closed form not taken");
    closed_worst = std::max(closed_worst, std::abs(c.distance - want));
    const SolverResult f = connes_distance(t, a, b, forced_bisection());
    out.require(f.method == Method::Bisection, "bisection not taken");
    out.observe(std::abs(f.distance - c.distance));
    out.observe(std::abs(c.seminorm_certificate - 1.0));
    out.observe(std::abs(f.seminorm_certificate - 1.0));
  }
  out.require(closed_worst <= 1e-12, "closed form off by more than 1e-12");
  char buf[64];
  std::snprintf(buf, sizeof buf, "closed-form max deviation %.3g", closed_worst);
  out.note += buf;
  return out;
}

// 4
Outcome d4_square_law() {
  Outcome out{true, 0.0, 1e-12, ""};
  Rng rng(4004);
  const SpectralTriple t = dirac_d4();
  double eig_worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const HermitianMatrix e = random_traceless_hermitian(2, rng);
    const std::vector<double> r = HermitianBasis(2).real_coefficients(e);
    const double len2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];  // |e-vector|^2
    const ComplexMatrix c = t.commutator_with(e);
    const ComplexMatrix sq = c.adjoint() * c;
    out.observe(max_abs_diff(sq, (ComplexMatrix::identity(4) * len2 - kron(e, e)) * 0.5));
    const auto eig = hermitian_eigen(HermitianMatrix::from_hermitian_part(sq));
    const double want[4] = {0.0, 0.0, len2, len2};
    for (int i = 0; i < 4; ++i) eig_worst = std::max(eig_worst, std::abs(eig.values[i] - want[i]));
  }
  out.require(eig_worst <= 1e-10, "eigenvalues off by more than 1e-10");
  return out;
}

double traceless_defect(const SpectralTriple& t, int count, Rng& rng) {
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const HermitianMatrix e = random_traceless_hermitian(2, rng);
    worst = std::max(worst, std::abs(lipschitz_seminorm(t, e) - operator_norm(e)));
  }
  return worst;
}

// 5
Outcome d4_variants() {
  Outcome out{true, 0.0, 1e-9, ""};
  Rng rng(5005);
  int variants = 0;
  std::array<int, 3> perm{1, 2, 3};
  do {
    for (int s = 0; s < 8; ++s) {
      const SpectralTriple t = dirac_d4({s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1}, perm);
      out.observe(traceless_defect(t, 50, rng));
      ++variants;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.require(variants == 48, "expected 48 variants");

  ComplexMatrix d16(16);
  for (int i = 1; i <= 3; ++i) d16 += kron(kron(pauli(i), pauli(i)), kron(pauli(i), pauli(i))) * 0.25;
  const SpectralTriple explicit16(Representation::diagonal(2, 8), d16, "d16");
  out.observe(traceless_defect(explicit16, 50, rng));
  out.observe(max_abs_diff(dirac_d4n({D4Level{}, D4Level{}}).dirac(), explicit16.dirac()));

  std::uniform_int_distribution<int> pick(0, 5);
  auto random_perm = [&] {
    std::array<int, 3> p{1, 2, 3};
    for (int k = pick(rng); k > 0; --k) std::next_permutation(p.begin(), p.end());
    return p;
  };
  for (std::size_t n : {2u, 3u}) {
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<D4Level> levels(n);
      for (auto& l : levels) l = {random_perm(), random_perm(), {rep == 1 ? -1 : 1, 1, rep == 2 ? -1 : 1}};
      out.observe(traceless_defect(dirac_d4n(levels), 50, rng));
    }
  }
  return out;
}

// 6
Outcome tensor_insertion() {
  Outcome out{true, 0.0, 1e-9, ""};
  Rng rng(6006);
  const SpectralTriple bases[] = {dirac_d4(), dirac_d4({1, 1, 1}, {3, 1, 2}), dirac_d4({-1, 1, -1}, {2, 1, 3})};
  for (int m = 0; m < 5; ++m) {
    HermitianMatrix mm = random_hermitian(2 + m % 3, rng);
    const SpectralTriple& base = bases[m % 3];
    const SpectralTriple ins = dirac_tensor_insert(base, mm);
    for (int k = 0; k < 50; ++k) {
      const HermitianMatrix e = random_hermitian(2, rng);
      out.observe(std::abs(lipschitz_seminorm(ins, e) - lipschitz_seminorm(base, e)));
    }
    out.require(ins.dirac() == dirac_tensor_insert(base, mm * 2.0).dirac(), "M and 2M differ");
    out.require(ins.dirac() == dirac_tensor_insert(base, mm * 0.125).dirac(), "M and M/8 differ");
  }
  // D8 = 1/4 (s2 (x) M~ (x) s1 + s3 (x) M~ (x) s2 + s1 (x) M~ (x) s3).
  const HermitianMatrix m = random_hermitian(2, rng);
  const ComplexMatrix mt = m.matrix() * (1.0 / operator_norm(m));
  ComplexMatrix d8(8);
  d8 += kron(kron(pauli(2), mt), pauli(1)) * 0.25;
  d8 += kron(kron(pauli(3), mt), pauli(2)) * 0.25;
  d8 += kron(kron(pauli(1), mt), pauli(3)) * 0.25;
  const SpectralTriple explicit8(Representation::diagonal(2, 4), d8, "d8");
  out.observe(max_abs_diff(dirac_tensor_insert(bases[1], m).dirac(), explicit8.dirac()));
  out.observe(traceless_defect(explicit8, 50, rng));
  return out;
}

// 7
Outcome infinite_fixture() {
  Outcome out{true, 0.0, 1e-12, ""};
  const SpectralTriple t(Representation::identity(2), pauli(1), "sigma_x");
  const DensityMatrix a(ComplexMatrix::diagonal({1.0, 0.0})), b(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}});
  const HermitianMatrix delta = state_difference(a, b);
  out.require(!distance_is_finite(t, delta), "kernel test missed the fixture");
  const SolverResult r = connes_distance(t, a, b);
  out.require(!r.finite && std::isinf(r.distance) && r.distance > 0, "distance not +inf");
  const HermitianMatrix e1 = pauli(1);
  for (double k : {1.0, 10.0, 100.0}) {
    out.observe(lipschitz_seminorm(t, e1 * k));  // feasible: L(k e1) = 0 <= 1
    out.observe(std::abs(std::abs(hs_inner(delta, e1 * k).real()) - k));
  }
  return out;
}

// 8
Outcome metric_laws() {
  Outcome out{true, 0.0, 3e-6, ""};
  Rng rng(8008);
  const SpectralTriple d4 = dirac_d4();
  const Representation rep = d4.representation();
  const ComplexMatrix d = d4.dirac().matrix();
  const SolverOptions bis = forced_bisection();
  for (double lam : {0.5, 2.0, -3.0}) {
    const SpectralTriple scaled(rep, d * lam, "scaled");
    const SpectralTriple shifted(rep, d + ComplexMatrix::identity(4) * lam, "shifted");
    for (int k = 0; k < 5; ++k) {
      const DensityMatrix a = random_density(2, rng), b = random_density(2, rng);
      const double base = distance_of(d4, a, b, bis);
      out.observe(std::abs(std::abs(lam) * distance_of(scaled, a, b, {}) - base));
      out.observe(std::abs(distance_of(shifted, a, b, bis) - base));
    }
  }
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix u = random_unitary(2, rng);
    const DensityMatrix a = random_density(2, rng), b = random_density(2, rng);
    const double base = distance_of(d4, a, b, bis);
    out.observe(std::abs(distance_of(d4, conjugated(u, a), conjugated(u, b), bis) - base));
    const SpectralTriple conj = conjugate_dirac(d4, u);
    const double moved = distance_of(d4, conjugated(u.adjoint(), a), conjugated(u.adjoint(), b), bis);
    out.observe(std::abs(distance_of(conj, a, b, bis) - moved));
  }
  const auto pu = permutation_unitaries();
  for (const ComplexMatrix& u : {pu.plus, pu.minus}) {
    const DensityMatrix a = random_density(2, rng), b = random_density(2, rng);
    out.observe(std::abs(distance_of(conjugate_dirac(d4, u), a, b, bis) -
                         distance_of(d4, conjugated(u.adjoint(), a), conjugated(u.adjoint(), b), bis)));
  }
  return out;
}

// 9
Outcome oracle_equivalence() {
  Outcome out{true, 0.0, 1e-3, ""};
  Rng rng(9009);
  for (int k = 0; k < 20; ++k) {
    const SpectralTriple t(Representation::diagonal(2, 2), random_traceless_hermitian(4, rng), "random");
    const auto& kernel = seminorm_kernel(t);
    out.require(kernel.size() == 1 && max_abs_diff(kernel[0] * (kernel[0](0, 0).real() > 0 ? 1.0 : -1.0),
                                                   HermitianMatrix::identity(2) * (1 / std::sqrt(2.0))) <= 1e-9,
                "kernel is not span{I}");
    const DensityMatrix a = random_density(2, rng), b = random_density(2, rng);
    const SolverResult r = connes_distance(t, a, b);
    out.require(r.method == Method::Bisection, "bisection not taken");
    out.observe(std::abs(r.distance - oracle_distance(t, a, b, 20000)));
  }
  return out;
}

// 10
Outcome tracenorm_optimality() {
  Outcome out{true, 0.0, 1e-10, ""};
  Rng rng(10010);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool norm_ok = true, never_exceeded = true;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 3;
    const HermitianMatrix delta = state_difference(random_density(n, rng), random_density(n, rng));
    const HermitianMatrix eo = optimal_element_tracenorm(delta);
    const double tn = trace_norm(delta.matrix());  // singular values, not the eigen path
    const double obj = hs_inner(delta, eo).real();
    out.observe(std::abs(obj - tn));
    norm_ok = norm_ok && operator_norm(eo) <= 1.0 + 1e-12;
    for (int j = 0; j < 1000; ++j) {
      HermitianMatrix p = random_hermitian(n, rng);
      if (j % 2) {
        // extreme point: V diag(+-1) V^dagger
        const ComplexMatrix v = random_unitary(n, rng);
        std::vector<double> signs(n);
        for (auto& s : signs) s = u(rng) < 0.5 ? -1.0 : 1.0;
        p = conjugate(v, HermitianMatrix::diagonal(signs));
      } else {
        p *= u(rng) / operator_norm(p);
      }
      never_exceeded = never_exceeded && hs_inner(delta, p).real() <= obj + 1e-12;
    }
  }
  out.require(norm_ok, "|e_o|_op exceeds 1 + 1e-12");
  out.require(never_exceeded, "a feasible P beat e_o");
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "two-point grid 21x21", 1.0, two_point_grid},
      {2, "corner isometry", 5.0, corner_isometry},
      {3, "D4 Bloch distances", 60.0, d4_bloch},
      {4, "D4 commutator-square law", 2.0, d4_square_law},
      {5, "D4' variants and D4^n", 30.0, d4_variants},
      {6, "tensor insertion and D8", 10.0, tensor_insertion},
      {7, "infinite-distance fixture", 1.0, infinite_fixture},
      {8, "metric laws over D4", 120.0, metric_laws},
      {9, "oracle equivalence", 600.0, oracle_equivalence},
      {10, "trace-norm optimal element", 10.0, tracenorm_optimality},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %2d (%s): max deviation %.3g (tol %.0e), %.2fs (limit %.0fs)%s%s\n",
                pass ? "PASS" : "FAIL", c.id, c.name, o.worst, o.tolerance, seconds, c.budget_seconds,
                in_time ? "" : " over time budget", o.note.empty() ? "" : ("; " + o.note).c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
