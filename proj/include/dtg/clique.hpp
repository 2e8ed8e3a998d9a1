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

#ifndef DTG_CLIQUE_HPP_
#define DTG_CLIQUE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "dtg/dag.hpp"
#include "dtg/feasibility.hpp"

namespace dtg {

// All k-vertex cliques of the underlying undirected graph, each sorted by
// vertex id, the list in lexicographic order. Neighborhood intersection along
// a degeneracy order, so every clique is produced once.
std::vector<std::vector<Vertex>> enumerate_k_cliques(const Dag& dag, int k);

// Block dynamic program over the k-cliques of `order`.
//
// Every k-clique is labeled with the size of the largest clique ending with
// it, one plus the best label in its relevant block. When `order` is k-clique
// extendable the result is a maximum clique; otherwise it is a set of the same
// size that the caller must check with is_clique. If the graph has no
// k-clique, the largest clique of smaller size is returned. k < 2 is treated
// as 2. The result is sorted by vertex id.
std::vector<Vertex> max_clique_with_ordering(const Dag& dag,
                                             std::span<const Vertex> order,
                                             int k);

// Weighted form: labels are weight sums. Throws Error(kNonpositiveWeight).
std::vector<Vertex> max_weight_clique_with_ordering(
    const Dag& dag, std::span<const Vertex> order, int k,
    std::span<const std::int64_t> weights);

struct CliqueSolution {
  std::vector<Vertex> vertices;  // sorted by id
  int k = 0;                     // largest extendability order used
};

// Maximum clique, one connected component at a time. Default mode tries the
// topological sort as a 2- and then 3-clique extendable ordering and accepts a
// result as soon as it is a clique (its size equals the best label, which
// bounds every clique from above); only then is lambda computed and
// k = floor(lambda) + 1 used. `strict` goes straight to the guaranteed k.
CliqueSolution max_clique_exact(const Dag& dag, bool strict = false);

// Clique within a factor i of the maximum, for 1 <= i <= lambda on a
// nondegenerate dag: drops edges whose endpoints' utilities differ by less
// than i t1 under a satisfying assignment at ratio lambda, then solves the
// remaining dag exactly. Throws Error(kInvalidFactor) when the factor is out
// of range, which includes every weak order (lambda = 0).
CliqueSolution max_clique_approx(const Dag& dag, int factor);

// Same with a caller-supplied satisfying assignment. Throws
// Error(kInvalidFactor) for factor < 1.
CliqueSolution max_clique_approx(const Dag& dag, int factor,
                                 std::span<const std::int64_t> alpha,
                                 Thresholds th);

// Dag keeping only edges (u,v) with alpha(v) - alpha(u) >= min_span.
Dag prune_short_edges(const Dag& dag, std::span<const std::int64_t> alpha,
                      std::int64_t min_span);

}  // namespace dtg

#endif  // DTG_CLIQUE_HPP_
