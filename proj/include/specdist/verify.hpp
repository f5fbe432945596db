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
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "specdist/errors.hpp"
#include "specdist/oracle.hpp"
#include "specdist/pauli.hpp"
#include "specdist/random.hpp"
#include "specdist/solver.hpp"
#include "specdist/states.hpp"
#include "specdist/tolerances.hpp"
#include "specdist/triple.hpp"

namespace specdist {

struct TrialRecord {
  std::string label;
  double deviation = 0.0;
  double value = 0.0;  // the computed quantity (may be +inf)
};

struct SuiteReport {
  std::string suite_name;
  int trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  bool pass = false;
  std::vector<TrialRecord> records;
};

namespace detail {

/// Collects records; a check that fails outright records deviation 1.
class Recorder {
 public:
  void add(std::string label, double deviation, double value = 0.0) {
    if (!std::isfinite(deviation)) deviation = std::numeric_limits<double>::max();
    records_.push_back({std::move(label), deviation, value});
  }
  void check(std::string label, bool ok, double value = 0.0) { add(std::move(label), ok ? 0.0 : 1.0, value); }
  std::vector<TrialRecord> take() { return std::move(records_); }

 private:
  std::vector<TrialRecord> records_;
};

using SuiteBody = std::function<void(int trials, Rng& rng, Recorder& out)>;

struct SuiteEntry {
  std::string_view name;
  double tolerance;
  std::vector<std::string_view> ops;  // library operations the suite exercises
  SuiteBody body;
};

inline std::uint64_t fnv1a(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  for (char c : name) mix(static_cast<unsigned char>(c));
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(seed >> (8 * i)));
  return h;
}

constexpr double kSolverSuiteTol = 3.0 * tol::kSolverDefault;

inline SpectralTriple random_general_triple(std::size_t n, Rng& rng) {
  return SpectralTriple(Representation::diagonal(n, 2), random_traceless_hermitian(2 * n, rng), "random");
}

inline std::array<int, 3> random_perm(Rng& rng) {
  std::array<int, 3> p{1, 2, 3};
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::array<int, 3> random_signs(Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  return {coin(rng) ? 1 : -1, coin(rng) ? 1 : -1, coin(rng) ? 1 : -1};
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline BlochVector random_bloch(Rng& rng, bool pure) {
  std::normal_distribution<double> g(0.0, 1.0);
  double v[3] = {g(rng), g(rng), g(rng)};
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  const double len = pure ? 1.0 : std::cbrt(uniform(rng, 0.0, 1.0));
  return BlochVector(v[0] * len / n, v[1] * len / n, v[2] * len / n);
}

inline DensityMatrix diagonal_state(double p) { return DensityMatrix(ComplexMatrix::diagonal({p, 1.0 - p})); }

/// max over `count` random traceless e of |L(e) - |e|_op|.
inline double traceless_isometry_defect(const SpectralTriple& t, int count, Rng& rng) {
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const HermitianMatrix e = random_traceless_hermitian(t.algebra_dim(), rng);
    worst = std::max(worst, std::abs(lipschitz_seminorm(t, e) - operator_norm(e)));
  }
  return worst;
}

inline std::string trial_label(const char* what, int k) { return std::string(what) + "#" + std::to_string(k); }

inline const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> registry = [] {
    std::vector<SuiteEntry> r;
    const SolverOptions opts;

    r.push_back({"lemma-d0", kSolverSuiteTol, {"connes_distance", "lipschitz_seminorm"},
                 [opts](int trials, Rng& rng, Recorder& out) {
                   for (int k = 0; k < trials; ++k) {
                     const std::size_t n = 2 + k % 2;
                     const SpectralTriple t = k % 3 == 0 ? dirac_d4() : random_general_triple(n, rng);
                     const std::size_t d = t.algebra_dim();
                     const DensityMatrix a = random_density(d, rng), b = random_density(d, rng);
                     const double same = connes_distance(t, a, a, opts).distance;
                     out.add(trial_label("equal", k), std::abs(same), same);
                     const HermitianMatrix delta = state_difference(a, b);
                     const double dist = connes_distance(t, a, b, opts).distance;
                     const double bound = hs_inner(delta, delta).real() / lipschitz_seminorm(t, delta);
                     out.add(trial_label("positivity", k), std::max(0.0, bound - dist), dist);
                     out.check(trial_label("distinct>0", k), dist > 0.0, dist);
                   }
                 }});

    r.push_back({"lemma-shift", kSolverSuiteTol, {"lipschitz_seminorm", "connes_distance"},
                 [opts](int trials, Rng& rng, Recorder& out) {
                   for (int k = 0; k < trials; ++k) {
                     const std::size_t n = 2 + k % 2;
                     const Representation rep = Representation::diagonal(n, 2);
                     const HermitianMatrix d = random_hermitian(2 * n, rng);
                     const double lam = uniform(rng, -3.0, 3.0);
                     const HermitianMatrix shifted = d + HermitianMatrix::identity(2 * n) * lam;
                     const HermitianMatrix e = random_hermitian(n, rng);
                     out.add(trial_label("seminorm", k),
                             std::abs(lipschitz_seminorm(rep, d, e) - lipschitz_seminorm(rep, shifted, e)));
                     const DensityMatrix a = random_density(n, rng), b = random_density(n, rng);
                     const double d0 = connes_distance(SpectralTriple(rep, d, "D"), a, b, opts).distance;
                     const double d1 = connes_distance(SpectralTriple(rep, shifted, "D+lI"), a, b, opts).distance;
                     out.add(trial_label("metric", k), std::abs(d0 - d1), d0);
                   }
                 }});

    r.push_back({"lemma-tloe", tol::kExactSuite, {"connes_distance", "lipschitz_seminorm"},
                 [opts](int trials, Rng& rng, Recorder& out) {
                   for (int k = 0; k < trials; ++k) {
                     const std::size_t n = 2 + k % 2;
                     const SpectralTriple t = random_general_triple(n, rng);
                     const DensityMatrix a = random_density(n, rng), b = random_density(n, rng);
                     const HermitianMatrix delta = state_difference(a, b);
                     const SolverResult res = connes_distance(t, a, b, opts);
                     const HermitianMatrix& e = *res.optimal_element;
                     const HermitianMatrix moved = e + HermitianMatrix::identity(n) * uniform(rng, -5.0, 5.0);
                     out.add(trial_label("seminorm", k),
                             std::abs(lipschitz_seminorm(t, moved) - lipschitz_seminorm(t, e)));
                     out.add(trial_label("objective", k),
                             std::abs(hs_inner(delta, moved).real() - hs_inner(delta, e).real()));
                   }
                 }});

    r.push_back({"lemma-scaling", kSolverSuiteTol, {"connes_distance"},
                 [opts](int trials, Rng& rng, Recorder& out) {
                   const double lambdas[] = {0.5, 2.0, -3.0};
                   for (int k = 0; k < trials; ++k) {
                     const std::size_t n = 2 + k % 2;
                     const Representation rep = Representation::diagonal(n, 2);
                     const HermitianMatrix d = random_traceless_hermitian(2 * n, rng);
                     const DensityMatrix a = random_density(n, rng), b = random_density(n, rng);
                     const double base = connes_distance(SpectralTriple(rep, d, "D"), a, b, opts).distance;
                     const double lam = lambdas[k % 3];
                     const double scaled = connes_distance(SpectralTriple(rep, d * lam, "lD"), a, b, opts).distance;
                     out.add(trial_label("scaling", k), std::abs(std::abs(lam) * scaled - base), scaled);
                   }
                 }});

    r.push_back({"theorem-Leo1", kSolverSuiteTol, {"connes_distance", "verify_optimal"},
                 [opts](int trials, Rng& rng, Recorder& out) {
                   for (int k = 0; k < trials; ++k) {
                     const std::size_t n = 2 + k % 3;
                     const SpectralTriple t = random_general_triple(n, rng);
                     const DensityMatrix a = random_density(n, rng), b = random_density(n, rng);
                     const SolverResult res = connes_distance(t, a, b, opts);
                     const OptimalityReport rep =
                         verify_optimal(t, state_difference(a, b), *res.optimal_element, kSolverSuiteTol, res.distance);
                     out.add(trial_label("seminorm=1", k), std::abs(rep.seminorm - 1.0), rep.seminorm);
                     out.add(trial_label("objective=d", k), std::abs(rep.objective - res.distance), rep.objective);
                     out.check(trial_label("report", k), rep.pass);
                   }
                 }});

    r.push_back({"lemma-centralizer", tol::kExactSuite,
                 {"seminorm_kernel", "distance_is_finite", "connes_distance", "oracle_distance"},
                 [opts](int trials, Rng& rng, Recorder& out) {
                   const SpectralTriple fixture(Representation::identity(2), pauli(1), "sigma_x");
                   const DensityMatrix one(ComplexMatrix::diagonal({1.0, 0.0}));
                   const DensityMatrix plus(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}});
                   const double d = connes_distance(fixture, one, plus, opts).distance;
                   out.check("fixture-infinite", std::isinf(d), d);
                   out.check("fixture-oracle", std::isinf(oracle_distance(fixture, one, plus, 200)));
                   out.check("fixture-kernel", seminorm_kernel(fixture).size() == 2);
                   for (int k = 0; k < trials; ++k) {
                     // M (x) I commutes with every I (x) a.
                     const HermitianMatrix m = random_traceless_hermitian(2, rng);
                     const SpectralTriple t(Representation::diagonal(2, 2), kron(m, ComplexMatrix::identity(2)),
                                            "central");
                     out.check(trial_label("kernel-full", k), seminorm_kernel(t).size() == 4);
                     const DensityMatrix a = random_density(2, rng), b = random_density(2, rng);
                     out.check(trial_label("infinite", k),
                               !distance_is_finite(t, state_difference(a, b)) &&
                                   std::isinf(connes_distance(t, a, b, opts).distance));
                   }
                 }});

    r.push_back({"theorem-lu", kSolverSuiteTol, {"connes_distance", "dirac_corner", "dirac_d4"},
                 [opts](int trials, Rng& rng, Recorder& out) {
                   const SpectralTriple triples[] = {dirac_d4(), dirac_corner(2), dirac_corner(3)};
                   for (int k = 0; k < trials; ++k) {
                     const SpectralTriple& t = triples[k % 3];
                     const std::size_t n = t.algebra_dim();
                     const ComplexMatrix u = random_unitary(n, rng);
                     const DensityMatrix a = random_density(n, rng), b = random_density(n, rng);
                     const DensityMatrix ua(conjugate(u, a.hermitian())), ub(conjugate(u, b.hermitian()));
                     const double d0 = connes_distance(t, a, b, opts).distance;
                     out.add(trial_label("invariance", k), std::abs(connes_distance(t, ua, ub, opts).distance - d0), d0);
                   }
                 }});

    r.push_back({"theorem-udu", kSolverSuiteTol, {"conjugate_dirac", "permutation_unitaries", "connes_distance"},
                 [opts](int trials, Rng& rng, Recorder& out) {
                   const auto pu = permutation_unitaries();
                   for (int k = 0; k < trials; ++k) {
                     const std::size_t n = k % 4 < 2 ? 2 : 3;
                     const SpectralTriple t = random_general_triple(n, rng);
                     const ComplexMatrix u = k % 4 == 0 ? pu.plus : k % 4 == 1 ? pu.minus : random_unitary(n, rng);
                     const SpectralTriple c = conjugate_dirac(t, u);
                     const DensityMatrix a = random_density(n, rng), b = random_density(n, rng);
                     const DensityMatrix ua(conjugate(u.adjoint(), a.hermitian()));
                     const DensityMatrix ub(conjugate(u.adjoint(), b.hermitian()));
                     const double dc = connes_distance(c, a, b, opts).distance;
                     out.add(trial_label("transport", k), std::abs(dc - connes_distance(t, ua, ub, opts).distance), dc);
                     const HermitianMatrix e = random_hermitian(n, rng);
                     out.add(trial_label("seminorm", k),
                             std::abs(lipschitz_seminorm(c, e) - lipschitz_seminorm(t, u.adjoint() * e * u)));
                   }
                 }});

    r.push_back({"theorem-corner", tol::kExactSuite, {"dirac_corner", "lipschitz_seminorm", "seminorm_kernel"},
                 [](int trials, Rng& rng, Recorder& out) {
                   for (int k = 0; k < trials; ++k) {
                     const std::size_t n = 2 + k % 3;
                     const SpectralTriple t = dirac_corner(n);
                     const ComplexMatrix e =
                         random_hermitian(n, rng).matrix() + random_hermitian(n, rng).matrix() * cplx(0.0, 1.0);
                     const double l = lipschitz_seminorm(t, e);
                     out.add(trial_label("isometry", k), std::abs(l - operator_norm(e)), l);
                     if (k < 3) out.check(trial_label("kernel-empty", k), seminorm_kernel(t).empty());
                   }
                 }});

    r.push_back({"theorem-t6", kSolverSuiteTol,
                 {"connes_distance", "trace_distance", "optimal_element_tracenorm", "dirac_d4n"},
                 [opts](int trials, Rng& rng, Recorder& out) {
                   SolverOptions forced = opts;
                   forced.force_bisection = true;
                   const SpectralTriple triples[] = {dirac_d4(), dirac_corner(2), dirac_corner(3),
                                                     dirac_d4n({D4Level{}, D4Level{}})};
                   for (int k = 0; k < trials; ++k) {
                     const SpectralTriple& t = triples[k % 4];
                     const std::size_t n = t.algebra_dim();
                     const DensityMatrix a = random_density(n, rng), b = random_density(n, rng);
                     const HermitianMatrix delta = state_difference(a, b);
                     const double td = trace_distance(a, b);
                     const SolverResult closed = connes_distance(t, a, b, opts);
                     out.add(trial_label("closed", k), std::abs(closed.distance - td), closed.distance);
                     const double general = connes_distance(t, a, b, forced).distance;
                     out.add(trial_label("bisection", k), std::abs(general - td), general);
                     const HermitianMatrix eo = optimal_element_tracenorm(delta);
                     out.add(trial_label("witness-L", k), std::abs(lipschitz_seminorm(t, eo) - 1.0));
                     out.add(trial_label("witness-objective", k), std::abs(hs_inner(delta, eo).real() - td));
                   }
                 }});

    r.push_back({"example-two-point", tol::kExactSuite, {"dirac_two_point", "connes_distance"},
                 [opts](int trials, Rng&, Recorder& out) {
                   const SpectralTriple t = dirac_two_point();
                   const int side = std::max(2, static_cast<int>(std::ceil(std::sqrt(trials))));
                   for (int k = 0; k < trials; ++k) {
                     const double p = static_cast<double>(k / side) / (side - 1);
                     const double q = static_cast<double>(k % side) / (side - 1);
                     const double d = connes_distance(t, diagonal_state(p), diagonal_state(q), opts).distance;
                     out.add(trial_label("grid", k), std::abs(d - 2.0 * std::abs(p - q)), d);
                   }
                 }});

    r.push_back({"lemma-d4", tol::kExactSuite, {"dirac_d4", "lipschitz_seminorm", "seminorm_kernel"},
                 [](int trials, Rng& rng, Recorder& out) {
                   const SpectralTriple t = dirac_d4();
                   out.check("kernel-identity", seminorm_kernel(t).size() == 1 &&
                                                    std::abs(std::abs(seminorm_kernel(t)[0].trace()) -
                                                             std::sqrt(2.0)) <= tol::kExactSuite);
                   for (int k = 0; k < trials; ++k) {
                     const HermitianMatrix e = random_traceless_hermitian(2, rng);
                     const double len = operator_norm(e);
                     out.add(trial_label("isometry", k), std::abs(lipschitz_seminorm(t, e) - len));
                     const ComplexMatrix c = t.commutator_with(e);
                     const ComplexMatrix sq = c.adjoint() * c;
                     const ComplexMatrix law = (ComplexMatrix::identity(4) * (len * len) - kron(e, e)) * 0.5;
                     out.add(trial_label("square-law", k), max_abs_diff(sq, law));
                     const auto eig = hermitian_eigen(HermitianMatrix::from_hermitian_part(sq));
                     const double want[4] = {0.0, 0.0, len * len, len * len};
                     double dev = 0.0;
                     for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(eig.values[i] - want[i]));
                     out.add(trial_label("square-spectrum", k), dev);
                   }
                 }});

    r.push_back({"lemma-d4p", tol::kExactSuite, {"dirac_d4", "lipschitz_seminorm"},
                 [](int trials, Rng& rng, Recorder& out) {
                   std::array<int, 3> perm{1, 2, 3};
                   do {
                     for (int s = 0; s < 8; ++s) {
                       const std::array<int, 3> signs{s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1};
                       const SpectralTriple t = dirac_d4(signs, perm);
                       const std::string label = "perm=" + std::to_string(perm[0]) + std::to_string(perm[1]) +
                                                 std::to_string(perm[2]) + ",signs=" + std::to_string(s);
                       out.add(label, traceless_isometry_defect(t, trials, rng));
                     }
                   } while (std::next_permutation(perm.begin(), perm.end()));
                 }});

    r.push_back({"theorem-d4n", tol::kExactSuite, {"dirac_d4n", "lipschitz_seminorm"},
                 [](int trials, Rng& rng, Recorder& out) {
                   ComplexMatrix d16(16);
                   for (int i = 1; i <= 3; ++i)
                     d16 += kron(kron(pauli(i), pauli(i)), kron(pauli(i), pauli(i))) * 0.25;
                   const SpectralTriple explicit16(Representation::diagonal(2, 8), d16, "d16");
                   out.add("d16-matrix", max_abs_diff(dirac_d4n({D4Level{}, D4Level{}}).dirac(), explicit16.dirac()));
                   out.add("d16-isometry", traceless_isometry_defect(explicit16, trials, rng));
                   for (int k = 0; k < trials; ++k) {
                     std::vector<D4Level> levels(2 + k % 2);
                     for (auto& l : levels) l = {random_perm(rng), random_perm(rng), random_signs(rng)};
                     const SpectralTriple t = dirac_d4n(levels);
                     out.add(trial_label(levels.size() == 2 ? "n=2" : "n=3", k), traceless_isometry_defect(t, 5, rng));
                   }
                 }});

    r.push_back({"lemma-insert", tol::kExactSuite, {"dirac_tensor_insert", "lipschitz_seminorm"},
                 [](int trials, Rng& rng, Recorder& out) {
                   for (int k = 0; k < trials; ++k) {
                     const SpectralTriple base = dirac_d4(random_signs(rng), random_perm(rng));
                     const HermitianMatrix m = random_hermitian(2 + k % 2, rng);
                     const SpectralTriple ins = dirac_tensor_insert(base, m);
                     double dev = 0.0;
                     for (int j = 0; j < 10; ++j) {
                       const HermitianMatrix e = random_hermitian(2, rng);
                       dev = std::max(dev, std::abs(lipschitz_seminorm(ins, e) - lipschitz_seminorm(base, e)));
                     }
                     out.add(trial_label("seminorm", k), dev);
                     out.add(trial_label("scale-invariance", k),
                             max_abs_diff(ins.dirac(), dirac_tensor_insert(base, m * 2.0).dirac()));
                   }
                 }});

    r.push_back({"example-d8", tol::kExactSuite, {"dirac_tensor_insert", "dirac_d4", "lipschitz_seminorm"},
                 [](int trials, Rng& rng, Recorder& out) {
                   for (int k = 0; k < trials; ++k) {
                     const HermitianMatrix m = random_hermitian(2, rng);
                     const ComplexMatrix mt = m.matrix() * (1.0 / operator_norm(m));
                     ComplexMatrix d8(8);
                     d8 += kron(kron(pauli(2), mt), pauli(1)) * 0.25;
                     d8 += kron(kron(pauli(3), mt), pauli(2)) * 0.25;
                     d8 += kron(kron(pauli(1), mt), pauli(3)) * 0.25;
                     const SpectralTriple explicit8(Representation::diagonal(2, 4), d8, "d8");
                     const SpectralTriple built = dirac_tensor_insert(dirac_d4({1, 1, 1}, {3, 1, 2}), m);
                     out.add(trial_label("matrix", k), max_abs_diff(built.dirac(), explicit8.dirac()));
                     out.add(trial_label("isometry", k), traceless_isometry_defect(explicit8, 5, rng));
                   }
                 }});

    r.push_back({"corollary-bloch", kSolverSuiteTol,
                 {"density_from_bloch", "bloch_from_density", "connes_distance", "oracle_distance"},
                 [opts](int trials, Rng& rng, Recorder& out) {
                   const SpectralTriple t = dirac_d4();
                   SolverOptions forced = opts;
                   forced.force_bisection = true;
                   for (int k = 0; k < trials; ++k) {
                     const BlochVector r1 = random_bloch(rng, k % 3 == 0);
                     const BlochVector r2 = random_bloch(rng, k % 3 != 2);
                     const DensityMatrix a = density_from_bloch(r1), b = density_from_bloch(r2);
                     const double want = distance(r1, r2);
                     const double closed = connes_distance(t, a, b, opts).distance;
                     out.add(trial_label("closed", k), std::abs(closed - want), closed);
                     const double general = connes_distance(t, a, b, forced).distance;
                     out.add(trial_label("bisection", k), std::abs(general - want), general);
                     const BlochVector back = bloch_from_density(a);
                     double rt = 0.0;
                     for (int i = 0; i < 3; ++i) rt = std::max(rt, std::abs(back[i] - r1[i]));
                     out.add(trial_label("round-trip", k), rt);
                     if (k < 5) {
                       // The oracle evaluates feasible ratios: it may never exceed d.
                       const double o = oracle_distance(t, a, b, 2000);
                       out.add(trial_label("oracle-bound", k), std::max(0.0, o - want), o);
                     }
                   }
                 }});
    return r;
  }();
  return registry;
}

inline const SuiteEntry& find_suite(std::string_view name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return s;
  throw ArgumentError("unknown suite: " + std::string(name));
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : detail::suite_registry()) names.emplace_back(s.name);
  return names;
}

/// Library operations exercised by the named suite.
inline std::vector<std::string> suite_operations(std::string_view name) {
  const auto& s = detail::find_suite(name);
  return {s.ops.begin(), s.ops.end()};
}

inline double suite_tolerance(std::string_view name) { return detail::find_suite(name).tolerance; }

/// Runs one registered suite.  Deterministic in (name, trials, seed).
inline SuiteReport run_suite(std::string_view name, int trials, std::uint64_t seed) {
  const auto& s = detail::find_suite(name);
  if (trials < 1) throw ArgumentError("trials must be >= 1");
  Rng rng(detail::fnv1a(seed, name));
  detail::Recorder rec;
  s.body(trials, rng, rec);
  SuiteReport r;
  r.suite_name = std::string(name);
  r.trials = trials;
  r.seed = seed;
  r.tolerance = s.tolerance;
  r.records = rec.take();
  for (const auto& t : r.records) r.max_deviation = std::max(r.max_deviation, t.deviation);
  r.pass = r.max_deviation <= r.tolerance;
  return r;
}

/// JSON number, or the string "inf" / "-inf" / "nan".
inline nlohmann::json json_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& t : r.records)
    records.push_back({{"label", t.label}, {"deviation", t.deviation}, {"value", json_number(t.value)}});
  return {{"suite", r.suite_name}, {"trials", r.trials},         {"seed", r.seed},
          {"tolerance", r.tolerance}, {"max_deviation", r.max_deviation}, {"pass", r.pass},
          {"records", std::move(records)}};
}

}  // namespace specdist
