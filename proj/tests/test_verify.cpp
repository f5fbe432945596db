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

#include <cmath>
#include <set>
#include <string>

#include "gtest/gtest.h"
#include "specdist/verify.hpp"

using namespace specdist;

TEST(Verify, TwoPointExample) {
  const SuiteReport r = run_suite("example-two-point", 25, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.records.size(), 25u);
  EXPECT_LE(r.max_deviation, 1e-9);
}

TEST(Verify, D4Example) {
  const SuiteReport r = run_suite("lemma-d4", 200, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.max_deviation, 1e-9);
}

TEST(Verify, CentralizerReportsInfinity) {
  const SuiteReport r = run_suite("lemma-centralizer", 1, 3);
  EXPECT_TRUE(r.pass);
  ASSERT_FALSE(r.records.empty());
  EXPECT_EQ(r.records.front().label, "fixture-infinite");
  EXPECT_TRUE(std::isinf(r.records.front().value));
  EXPECT_EQ(to_json(r)["records"][0]["value"], "inf");
}

TEST(Verify, D4PrimeCoversAll48Variants) {
  const SuiteReport r = run_suite("lemma-d4p", 5, 1);
  EXPECT_EQ(r.records.size(), 48u);
  std::set<std::string> labels;
  for (const auto& t : r.records) labels.insert(t.label);
  EXPECT_EQ(labels.size(), 48u);
  EXPECT_TRUE(r.pass);
}

TEST(Verify, EverySuitePasses) {
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite(name, 6, 11);
    EXPECT_TRUE(r.pass) << name << " max_deviation " << r.max_deviation;
    EXPECT_EQ(r.pass, r.max_deviation <= r.tolerance);
  }
}

TEST(Verify, Deterministic) {
  for (const char* name : {"corollary-bloch", "theorem-udu", "lemma-insert"}) {
    EXPECT_EQ(to_json(run_suite(name, 4, 99)), to_json(run_suite(name, 4, 99)));
  }
  EXPECT_NE(to_json(run_suite("lemma-insert", 4, 1)), to_json(run_suite("lemma-insert", 4, 2)));
}

TEST(Verify, Errors) {
  EXPECT_THROW(run_suite("lemma-nonexistent", 1, 0), ArgumentError);
  EXPECT_THROW(run_suite("lemma-d4", 0, 0), ArgumentError);
}

TEST(Verify, Tolerances) {
  EXPECT_EQ(suite_tolerance("lemma-d4"), 1e-9);
  EXPECT_EQ(suite_tolerance("corollary-bloch"), 3e-6);
}

TEST(Verify, CoverageOfLibraryOperations) {
  const std::set<std::string> required = {
      "lipschitz_seminorm", "seminorm_kernel",           "distance_is_finite",    "dirac_two_point",
      "dirac_corner",       "dirac_d4",                  "dirac_d4n",             "dirac_tensor_insert",
      "permutation_unitaries", "conjugate_dirac",        "density_from_bloch",    "bloch_from_density",
      "trace_distance",     "optimal_element_tracenorm", "connes_distance",       "oracle_distance",
      "verify_optimal"};
  std::set<std::string> covered;
  for (const auto& name : suite_names())
    for (const auto& op : suite_operations(name)) covered.insert(op);
  for (const auto& op : required) EXPECT_TRUE(covered.count(op)) << op;
}

TEST(Verify, RegistryNames) {
  const std::set<std::string> expected = {
      "lemma-d0",       "lemma-shift",      "lemma-tloe",        "lemma-scaling", "theorem-Leo1",
      "lemma-centralizer", "theorem-lu",    "theorem-udu",       "theorem-corner", "theorem-t6",
      "example-two-point", "lemma-d4",      "lemma-d4p",         "theorem-d4n",   "lemma-insert",
      "example-d8",     "corollary-bloch"};
  const auto names = suite_names();
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()), expected);
}
