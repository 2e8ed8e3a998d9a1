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

#include "dtg/lambda.hpp"
#include "dtg/oracles.hpp"
#include "support.hpp"

using namespace dtg;
using dtg::test::make;

TEST_CASE("forcing ratio oracles") {
  CHECK(oracle::brute_max_forcing_ratio(test::p3()) == Rational(2));
  CHECK_FALSE(oracle::brute_max_forcing_ratio(make(3, {{0, 1}, {0, 2}, {1, 2}})).has_value());
  CHECK(oracle::brute_lambda(test::bipartite22()) == Rational(0));
  CHECK(oracle::brute_lambda(test::p4()) == Rational(3));
  CHECK(oracle::binary_search_lambda(test::p4()) == Rational(3));
  CHECK(oracle::binary_search_lambda(test::diamond()) == Rational(2));
  CHECK(oracle::binary_search_lambda(oracle::chain_plus_isolated(8)) == Rational(3));
}

TEST_CASE("Floyd-Warshall feasibility") {
  auto ok = oracle::brute_feasible(test::p3(), {1, 2});
  REQUIRE(ok.has_value());
  CHECK(*ok == std::vector<std::int64_t>{-2, -1, 0});
  CHECK_FALSE(oracle::brute_feasible(test::p3(), {1, 1}).has_value());
  auto zeros = oracle::brute_feasible(make(3, {}), {1, 1});
  REQUIRE(zeros.has_value());
  CHECK(*zeros == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("combinatorial optima") {
  Dag p = test::p3();
  CHECK(oracle::brute_max_clique(p).value == 2);
  CHECK(oracle::brute_independent_set(p).value == 2);
  CHECK(oracle::brute_chromatic(p).value == 2);
  CHECK(oracle::brute_clique_cover(p).value == 2);

  Dag t = oracle::transitive_tournament(4);
  CHECK(oracle::brute_max_clique(t).value == 4);
  CHECK(oracle::brute_independent_set(t).value == 1);
  CHECK(oracle::brute_chromatic(t).value == 4);
  CHECK(oracle::brute_clique_cover(t).value == 1);

  Dag e = make(4, {});
  CHECK(oracle::brute_max_clique(e).value == 1);
  CHECK(oracle::brute_independent_set(e).value == 4);
  CHECK(oracle::brute_chromatic(e).value == 1);
  CHECK(oracle::brute_clique_cover(e).value == 4);
}

TEST_CASE("generators") {
  Dag p4 = oracle::path(4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.has_edge(2, 3));
  CHECK(oracle::all_dags(3).size() == 25);
  CHECK(oracle::all_dags(4).size() == 543);
  CHECK(oracle::labeled_dag_count(4) == 543);
  CHECK(oracle::labeled_dag_count(5) == 29281);

  std::vector<Edge> triangle{{0, 1}, {1, 2}, {0, 2}};
  Dag tri = oracle::from_colored_graph(3, triangle, {0, 1, 2});
  CHECK(tri.has_edge(0, 1));
  CHECK(tri.has_edge(1, 2));
  CHECK(tri.has_edge(0, 2));

  Dag a = oracle::random_dag(20, 0.3, 42);
  Dag b = oracle::random_dag(20, 0.3, 42);
  CHECK(std::ranges::equal(a.edges(), b.edges()));
  CHECK(oracle::chain_plus_isolated(5).edge_count() == 6);
  CHECK(test::error_of([] { oracle::generate("nope", 3, 0.5, 1); }) == ErrorCode::kBadParams);
}

TEST_CASE("extendability checker") {
  Dag t4 = oracle::transitive_tournament(4);
  std::vector<Vertex> order = topological_sort(t4);
  CHECK(oracle::is_k_clique_extendable(t4, order, 2));
  Dag p = test::p3();
  std::vector<Vertex> porder = topological_sort(p);
  CHECK_FALSE(oracle::is_k_clique_extendable(p, porder, 2));
  CHECK(oracle::is_k_clique_extendable(p, porder, 3));
}
