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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "specdist/errors.hpp"
#include "specdist/solver.hpp"
#include "specdist/spec_io.hpp"
#include "specdist/triple.hpp"
#include "specdist/verify.hpp"

namespace specdist::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kParseError = 2, kSolverError = 3 };

struct Flags {
  double tol = tol::kSolverDefault;
  std::uint64_t seed = 0;
  int restarts = 8;
  int max_bisection = 60;
  bool force_bisection = false;
  std::string format;  // json | csv; empty picks the command default

  SolverOptions solver() const {
    SolverOptions o;
    o.tol = tol;
    o.seed = seed;
    o.restarts = restarts;
    o.max_bisection = max_bisection;
    o.force_bisection = force_bisection;
    return o;
  }
};

inline json element_json(const HermitianMatrix& e) {
  json rows = json::array();
  for (std::size_t i = 0; i < e.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < e.dim(); ++j) row.push_back({round9(e(i, j).real()), round9(e(i, j).imag())});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json distance_record(const SolverResult& r) {
  json j = {{"distance", json9(r.distance)}, {"finite", r.finite}, {"method", to_string(r.method)}};
  if (r.finite) {
    j["seminorm_certificate"] = json9(r.seminorm_certificate);
    j["objective_certificate"] = json9(r.objective_certificate);
    if (r.optimal_element) j["optimal_element"] = element_json(*r.optimal_element);
  }
  if (r.method == Method::Bisection) {
    j["bracket"] = {json9(r.iterations.lower), json9(r.iterations.upper)};
    j["iterations"] = {{"bisection", r.iterations.bisection_steps},
                       {"newton", r.iterations.newton_steps},
                       {"restarts", r.iterations.restarts_used}};
  }
  return j;
}

inline SpectralTriple load_triple(const std::string& path) {
  return build_triple(triple_spec_from_json(read_json_file(path)));
}

inline DensityMatrix load_state(const std::string& path) {
  return build_state(state_spec_from_json(read_json_file(path)));
}

inline int cmd_distance(const Flags& f, const std::string& triple_file, const std::string& s1,
                        const std::string& s2, std::ostream& out) {
  const SpectralTriple t = load_triple(triple_file);
  const DensityMatrix a = load_state(s1), b = load_state(s2);
  if (a.dim() != t.algebra_dim() || b.dim() != t.algebra_dim())
    throw ParseError("state dimension does not match the algebra");
  const SolverResult r = connes_distance(t, a, b, f.solver());
  if (f.format == "csv") {
    out << "distance,finite,method,seminorm_certificate,objective_certificate\n"
        << format9(r.distance) << ',' << (r.finite ? "true" : "false") << ',' << to_string(r.method) << ','
        << (r.finite ? format9(r.seminorm_certificate) : "") << ','
        << (r.finite ? format9(r.objective_certificate) : "") << '\n';
  } else {
    out << distance_record(r).dump(2) << '\n';
  }
  return kOk;
}

inline int cmd_seminorm(const Flags& f, const std::string& triple_file, const std::string& element_file,
                        std::ostream& out) {
  const SpectralTriple t = load_triple(triple_file);
  const ComplexMatrix e = element_from_json(read_json_file(element_file));
  if (e.dim() != t.algebra_dim()) throw ParseError("element dimension does not match the algebra");
  const double l = lipschitz_seminorm(t, e);
  const bool in_ball = l <= 1.0;
  if (f.format == "csv") {
    out << "seminorm,in_ball,kernel_dim\n"
        << format9(l) << ',' << (in_ball ? "true" : "false") << ',' << t.kernel().size() << '\n';
  } else {
    const json j = {{"seminorm", json9(l)}, {"in_ball", in_ball}, {"kernel_dim", t.kernel().size()}};
    out << j.dump(2) << '\n';
  }
  return kOk;
}

inline int cmd_verify(const Flags& f, std::vector<std::string> names, int trials, const std::string& output,
                      std::ostream& out, std::ostream& err) {
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = suite_names();
  for (const auto& n : names) suite_tolerance(n);  // unknown names fail before any work
  json reports = json::array();
  bool all = true;
  for (const auto& n : names) {
    const SuiteReport r = run_suite(n, trials, f.seed);
    all = all && r.pass;
    err << (r.pass ? "PASS " : "FAIL ") << n << " max_deviation=" << format9(r.max_deviation)
        << " tolerance=" << format9(r.tolerance) << '\n';
    reports.push_back(to_json(r));
  }
  if (output.empty() || output == "-") {
    out << reports.dump(2) << '\n';
  } else {
    std::ofstream file(output);
    if (!file) throw ParseError("cannot write " + output);
    file << reports.dump(2) << '\n';
  }
  return all ? kOk : kFailed;
}

inline int cmd_table(const Flags& f, const std::string& triple_file, const std::string& states_file,
                     std::ostream& out) {
  const SpectralTriple t = load_triple(triple_file);
  const std::vector<StateSpec> specs = state_list_from_json(read_json_file(states_file));
  std::vector<DensityMatrix> states;
  for (const auto& s : specs) {
    states.push_back(build_state(s));
    if (states.back().dim() != t.algebra_dim()) throw ParseError("state dimension does not match the algebra");
  }
  const std::size_t n = states.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  const SolverOptions opts = f.solver();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = connes_distance(t, states[i], states[j], opts).distance;

  if (f.format == "json") {
    json labels = json::array(), rows = json::array();
    for (const auto& s : specs) labels.push_back(s.label);
    for (const auto& row : d) {
      json r = json::array();
      for (double v : row) r.push_back(json9(v));
      rows.push_back(std::move(r));
    }
    out << json{{"labels", labels}, {"distances", rows}}.dump(2) << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < n; ++i) out << (i ? "," : "") << specs[i].label;
  out << '\n';
  for (const auto& row : d) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? "," : "") << format9(row[j]);
    out << '\n';
  }
  return kOk;
}

/// The specdist command line.  Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Spectral distances on finite spectral triples", "specdist"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--tol", f.tol, "target absolute accuracy of general solves")->check(CLI::PositiveNumber);
  app.add_option("--seed", f.seed, "seed for solver restarts and verification suites");
  app.add_option("--restarts", f.restarts, "restart budget of the general solver")->check(CLI::PositiveNumber);
  app.add_option("--max-bisection", f.max_bisection, "bisection step budget")->check(CLI::PositiveNumber);
  app.add_flag("--force-bisection", f.force_bisection, "skip the closed form (cross-checking)");
  app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  std::string triple_file, s1, s2, element_file, states_file, output;
  std::vector<std::string> names;
  int trials = 20;

  auto* distance = app.add_subcommand("distance", "Connes distance between two states");
  distance->add_option("triple", triple_file, "triple description (JSON)")->required();
  distance->add_option("state1", s1, "first state (JSON)")->required();
  distance->add_option("state2", s2, "second state (JSON)")->required();

  auto* seminorm = app.add_subcommand("seminorm", "Lipschitz seminorm of an element");
  seminorm->add_option("triple", triple_file, "triple description (JSON)")->required();
  seminorm->add_option("element", element_file, "element (JSON)")->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suites", names, "suite names, or all");
  verify->add_option("--trials", trials, "trials per suite")->check(CLI::PositiveNumber);
  verify->add_option("--output,-o", output, "report path (default stdout)");

  auto* table = app.add_subcommand("table", "pairwise distance table");
  table->add_option("triple", triple_file, "triple description (JSON)")->required();
  table->add_option("states", states_file, "state list (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*distance) return cmd_distance(f, triple_file, s1, s2, out);
    if (*seminorm) return cmd_seminorm(f, triple_file, element_file, out);
    if (*verify) return cmd_verify(f, names, trials, output, out, err);
    if (*table) return cmd_table(f, triple_file, states_file, out);
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << " (bracket " << format9(e.lower()) << ", " << format9(e.upper())
        << ")\n";
    return kSolverError;
  } catch (const ConvergenceError& e) {
    err << "solver error: " << e.what() << '\n';
    return kSolverError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace specdist::cli
