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


#include <doctest.h>

#include "dtg/lambda.hpp"
#include "dtg/oracles.hpp"
#include "support.hpp"

using namespace dtg;
using dtg::test::make;

TEST_CASE("minimum cycle mean") {
  CHECK(min_cycle_mean(test::p3(), {1, 1}).mean == Rational(-1, 3));
  CHECK(min_cycle_mean(test::p4(), {1, 1}).mean == Rational(-1, 2));
  CHECK(test::error_of([] { min_cycle_mean(make(2, {}), {1, 1}); }) ==
        ErrorCode::kDegenerateInput);
}

TEST_CASE("lambda on named families") {
  CHECK(compute_lambda(test::p4()).lambda == Rational(3));
  CHECK(compute_lambda(test::bipartite22()).lambda == Rational(0));
  CHECK(compute_lambda(test::diamond()).lambda == Rational(2));
  CHECK(compute_lambda(oracle::chain_plus_isolated(6)).lambda == Rational(2));
  CHECK(compute_lambda(oracle::chain_plus_isolated(8)).lambda == Rational(3));
  CHECK(compute_lambda(test::five_thirds()).lambda == Rational(5, 3));
}

TEST_CASE("lambda is clamped to one") {
  LambdaResult r = compute_lambda(make(3, {{0, 1}}));
  CHECK(r.lambda == Rational(1));
  REQUIRE(r.max_forcing_ratio.has_value());
  CHECK(*r.max_forcing_ratio == Rational(1, 2));
  CHECK(r.clamped());
}

TEST_CASE("certificates on paths") {
  LambdaCertificate c = certify_lambda(test::p3());
  CHECK(c.lambda == Rational(2));
  CHECK(c.thresholds == Thresholds{1, 2});
  CHECK(c.assignment.alpha == std::vector<std::int64_t>{-2, -1, 0});
  CHECK(verify_forcing_cycle(test::p3(), c.cycle) == Rational(2));

  LambdaCertificate c4 = certify_lambda(test::p4());
  CHECK(c4.lambda == Rational(3));
  CHECK(c4.cycle.edge_count() == 3);
  CHECK(c4.cycle.hop_count() == 1);
}

TEST_CASE("certificate with thresholds three and five") {
  Dag d = test::five_thirds();
  LambdaCertificate c = certify_lambda(d);
  CHECK(c.thresholds == Thresholds{3, 5});
  CHECK(verify_assignment(d, c.thresholds, c.assignment.alpha).empty());
  CHECK(c.cycle.steps.size() == 8);
  CHECK(c.cycle.edge_count() == 5);
  CHECK(c.cycle.hop_count() == 3);
  CHECK(verify_forcing_cycle(d, c.cycle) == Rational(5, 3));
}

TEST_CASE("certify rejects weak orders") {
  CHECK(test::error_of([] { certify_lambda(test::bipartite22()); }) ==
        ErrorCode::kDegenerateInput);
}

TEST_CASE("lambda agrees with both oracles on all dags up to four vertices") {
  int count = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Dag& d : oracle::all_dags(n)) {
      Rational fast = compute_lambda(d).lambda;
      REQUIRE(fast == oracle::brute_lambda(d));
      REQUIRE(fast == oracle::binary_search_lambda(d));
      ++count;
    }
  }
  CHECK(count == 1 + 3 + 25 + 543);
}
