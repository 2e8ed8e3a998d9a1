// Copyright 2026 The dtg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Seeded property checks over random dags, delegated to the harness checks.

#include <doctest.h>

#include <random>

#include "dtg/harness.hpp"
#include "dtg/lambda.hpp"
#include "dtg/oracles.hpp"

using namespace dtg;

namespace {

void require_clean(const std::string& what, const Dag& d, std::uint64_t seed) {
  INFO(what << " seed " << seed << " n " << d.vertex_count());
  CHECK(what.empty());
}

}  // namespace

TEST_CASE("small random dags pass every oracle cross-check") {
  std::mt19937_64 rng(20261017);
  for (int i = 0; i < 150; ++i) {
    std::uint64_t seed = rng();
    int n = 5 + static_cast<int>(seed % 4);
    double p = 0.15 + 0.1 * static_cast<double>(i % 8);
    Dag d = oracle::random_dag(n, p, seed);
    require_clean(harness::check_lambda_oracles(d), d, seed);
    require_clean(harness::check_certificate(d), d, seed);
    require_clean(harness::check_extendability(d), d, seed);
    require_clean(harness::check_clique(d), d, seed);
    require_clean(harness::check_approximations(d), d, seed);
    require_clean(harness::check_transitivity(d), d, seed);
    require_clean(harness::check_round_trip(d), d, seed);
    require_clean(harness::check_pass_bounds(d), d, seed);
  }
}

TEST_CASE("medium random dags: feasibility against Floyd-Warshall") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    std::uint64_t seed = rng();
    int n = 15 + static_cast<int>(seed % 25);
    Dag d = oracle::random_dag(n, 0.05 + 0.05 * (i % 6), seed);
    for (Thresholds th : {Thresholds{1, 1}, Thresholds{2, 5}, Thresholds{1, 3},
                          Thresholds{3, 11}}) {
      require_clean(harness::check_feasibility(d, th), d, seed);
    }
    Rational lambda = compute_lambda(d).lambda;
    if (lambda != Rational(0)) {
      Thresholds at{lambda.den(), lambda.num()};
      CHECK(oracle::brute_feasible(d, at).has_value());
    }
  }
}

TEST_CASE("colored-graph dags keep their bounds and certificates") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Dag d = oracle::random_colored_dag(8 + static_cast<int>(seed % 5), 0.4, seed);
    require_clean(harness::check_certificate(d), d, seed);
    require_clean(harness::check_pass_bounds(d), d, seed);
    require_clean(harness::check_round_trip(d), d, seed);
  }
}

TEST_CASE("larger random dags: certificates and pass bounds") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    Dag d = oracle::random_dag(120, 0.02 * static_cast<double>(seed - 99), seed);
    require_clean(harness::check_certificate(d), d, seed);
    require_clean(harness::check_pass_bounds(d), d, seed);
  }
}

TEST_CASE("selftest report") {
  auto report = harness::run_selftest(6, 30, 3);
  CHECK(report["ok"] == true);
  CHECK(report["instances"] == 1 + 3 + 25 + 543 + 30);
  CHECK(report["failures"].empty());
  CHECK_THROWS(harness::run_selftest(13, 1, 1));
}

TEST_CASE("bench report") {
  auto report = harness::run_bench("random", {30, 60}, 0.2, 5);
  CHECK(report["bounds_ok"] == true);
  REQUIRE(report["rows"].size() == 2);
  CHECK(report["rows"][0]["n"] == 30);
  auto weak = harness::run_bench("edgeless", {10}, 0.5, 1);
  CHECK(weak["rows"][0]["degenerate"] == true);
  CHECK(weak["bounds_ok"] == true);
}
