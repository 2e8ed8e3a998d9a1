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

#include <algorithm>

#include "dtg/dag.hpp"
#include "dtg/rational.hpp"
#include "support.hpp"

using namespace dtg;
using dtg::test::make;

TEST_CASE("rational arithmetic reduces and orders") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
  CHECK((Rational(5, 3) * Rational(3)).to_string() == "5");
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(test::error_of([] { Rational::parse("1/0"); }) == ErrorCode::kParseError);
  CHECK(test::error_of([] { Rational::parse("x"); }) == ErrorCode::kParseError);
}

TEST_CASE("build accepts well-formed input") {
  Dag d = test::p3();
  CHECK(d.vertex_count() == 3);
  CHECK(d.edge_count() == 2);
  CHECK(d.has_edge(0, 1));
  CHECK_FALSE(d.has_edge(1, 0));
  CHECK(d.adjacent(1, 0));
  Dag one = make(1, {});
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
}

TEST_CASE("build rejects malformed input") {
  try {
    make(2, {{0, 1}, {1, 0}});
    FAIL("expected a cycle error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCycleDetected);
    std::vector<long long> cycle = e.detail();
    std::sort(cycle.begin(), cycle.end());
    CHECK(cycle == std::vector<long long>{0, 1});
  }
  CHECK(test::error_of([] { make(2, {{0, 0}}); }) == ErrorCode::kSelfLoop);
  CHECK(test::error_of([] { make(2, {{0, 2}}); }) == ErrorCode::kVertexOutOfRange);
  CHECK(test::error_of([] { make(2, {{0, 1}, {0, 1}}); }) == ErrorCode::kDuplicateEdge);
  CHECK(test::error_of([] { make(3, {{0, 1}, {1, 2}, {2, 0}}); }) ==
        ErrorCode::kCycleDetected);
}

TEST_CASE("topological sort breaks ties by id") {
  CHECK(topological_sort(test::p3()) == std::vector<Vertex>{0, 1, 2});
  CHECK(topological_sort(make(2, {})) == std::vector<Vertex>{0, 1});
  CHECK(topological_sort(test::diamond()) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(topological_sort(make(3, {{2, 0}, {1, 0}})) == std::vector<Vertex>{1, 2, 0});
}

TEST_CASE("hops are the non-adjacent pairs") {
  auto h = hops(test::p3());
  REQUIRE(h.size() == 1);
  CHECK(h[0].u == 0);
  CHECK(h[0].v == 2);
  CHECK(hops(make(3, {{0, 1}, {0, 2}, {1, 2}})).empty());
  CHECK(hops(make(3, {})).size() == 3);
  Dag d = test::diamond();
  CHECK(hop_count(d) + d.edge_count() == 6);
}

TEST_CASE("transitivity") {
  CHECK_FALSE(is_transitive(test::p3()));
  CHECK(is_transitive(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
  CHECK(is_transitive(make(4, {})));
}

TEST_CASE("weak order recognition") {
  auto c = classify_degenerate(test::bipartite22());
  REQUIRE(c.levels.has_value());
  CHECK(*c.levels == std::vector<int>{0, 0, 1, 1});
  CHECK_FALSE(classify_degenerate(test::p3()).levels.has_value());
  auto single = classify_degenerate(make(1, {}));
  REQUIRE(single.levels.has_value());
  CHECK(*single.levels == std::vector<int>{0});
}

TEST_CASE("components, induced subdags and set predicates") {
  Dag d = make(5, {{0, 1}, {3, 4}});
  auto comps = connected_components(d);
  CHECK(comps.size() == 3);
  Dag sub = induced_subdag(d, std::vector<Vertex>{3, 4});
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.has_edge(0, 1));
  std::vector<Vertex> pair{0, 1}, apart{0, 2};
  CHECK(is_clique(d, pair));
  CHECK_FALSE(is_clique(d, apart));
  CHECK(is_independent(d, apart));
  CHECK_FALSE(is_independent(d, pair));
}
