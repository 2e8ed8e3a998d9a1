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

#ifndef DTG_ORACLES_HPP_
#define DTG_ORACLES_HPP_

// Exhaustive ground truth and instance generators. Everything here is
// deliberately naive and shares no code path with the fast algorithms beyond
// the Dag container itself.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtg/dag.hpp"
#include "dtg/feasibility.hpp"
#include "dtg/rational.hpp"

namespace dtg::oracle {

// Largest edges/hops ratio over all simple cycles of edges and hops; nullopt
// when there is no cycle with a hop. Depth-first enumeration, n <= 12.
std::optional<Rational> brute_max_forcing_ratio(const Dag& dag);

// 0 for weak orders, else max(1, brute_max_forcing_ratio). n <= 12, throws
// Error(kTooLarge) beyond.
Rational brute_lambda(const Dag& dag);

// Floyd-Warshall on the explicit constraint graph. Returns the minimum path
// weight ending at each vertex, or nullopt when a negative cycle exists.
// n <= 300.
std::optional<std::vector<std::int64_t>> brute_feasible(const Dag& dag,
                                                        Thresholds th);

// Binary search over the sorted candidates j/i, 1 <= i <= j, i + j <= n,
// probing with brute_feasible. n <= 300.
Rational binary_search_lambda(const Dag& dag);

struct Optimum {
  int value = 0;
  // Vertex set (clique, independent set) or one set per class/clique.
  std::vector<std::vector<Vertex>> witness;
};

Optimum brute_max_clique(const Dag& dag);         // n <= 12
Optimum brute_independent_set(const Dag& dag);    // n <= 12
Optimum brute_chromatic(const Dag& dag);          // n <= 8
Optimum brute_clique_cover(const Dag& dag);       // n <= 8

// Direct check of k-clique extendability: for every pair of k-cliques X, Y
// with |X & Y| = k - 1 where X - Y = {a} precedes and Y - X = {b} follows the
// shared part in `order`, a and b must be adjacent. Exhaustive over k-cliques.
bool is_k_clique_extendable(const Dag& dag, std::span<const Vertex> order, int k);

// Number of labeled dags on n vertices by the inclusion-exclusion recurrence
// over source sets.
std::int64_t labeled_dag_count(int n);

// ---- generators -----------------------------------------------------------

// All labeled dags on n <= 4 vertices, in a fixed enumeration order.
std::vector<Dag> all_dags(int n);

// Random undirected G(n, p) edges oriented by a uniform random permutation.
// Reproducible from (n, p, seed) on every platform.
Dag random_dag(int n, double p, std::uint64_t seed);

// Directed path 0 -> 1 -> ... -> n-1.
Dag path(int n);

// Transitive tournament on 0..n-2 plus the isolated vertex n-1.
Dag chain_plus_isolated(int n);

Dag transitive_tournament(int n);
Dag edgeless(int n);

// Orients each edge from the lower color class to the higher one.
// `colors` must be a proper coloring of the undirected edge list.
Dag from_colored_graph(int n, const std::vector<Edge>& undirected,
                       const std::vector<int>& colors);

// Random properly 3-colored graph (uniform classes, cross-class edges with
// probability p) fed through from_colored_graph.
Dag random_colored_dag(int n, double p, std::uint64_t seed);

// Named family dispatcher used by the CLI and benchmarks. Recognized
// families: path, chain, tournament, edgeless, random, coloring. Throws
// Error(kBadParams) for unknown names or out-of-range parameters.
Dag generate(const std::string& family, int n, double p, std::uint64_t seed);

}  // namespace dtg::oracle

#endif  // DTG_ORACLES_HPP_
