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

#include "dtg/clique.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "dtg/error.hpp"
#include "dtg/lambda.hpp"

namespace dtg {
namespace {

std::vector<std::vector<Vertex>> undirected_adjacency(const Dag& dag) {
  std::vector<std::vector<Vertex>> adj(dag.vertex_count());
  for (Vertex v = 0; v < dag.vertex_count(); ++v) {
    adj[v].assign(dag.out(v).begin(), dag.out(v).end());
    adj[v].insert(adj[v].end(), dag.in(v).begin(), dag.in(v).end());
    std::sort(adj[v].begin(), adj[v].end());
  }
  return adj;
}

// Position of each vertex when repeatedly removing a minimum-degree vertex.
std::vector<int> degeneracy_rank(const std::vector<std::vector<Vertex>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> degree(n);
  int max_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<std::vector<Vertex>> bucket(max_degree + 1);
  for (Vertex v = n - 1; v >= 0; --v) bucket[degree[v]].push_back(v);
  std::vector<int> rank(n, -1);
  int next = 0;
  int d = 0;
  while (next < n) {
    while (bucket[d].empty()) ++d;
    Vertex v = bucket[d].back();
    bucket[d].pop_back();
    if (rank[v] != -1 || degree[v] != d) continue;  // stale entry
    rank[v] = next++;
    for (Vertex w : adj[v]) {
      if (rank[w] != -1) continue;
      --degree[w];
      bucket[degree[w]].push_back(w);
      d = std::min(d, degree[w]);
    }
  }
  return rank;
}

void require_order(const Dag& dag, std::span<const Vertex> order) {
  const int n = dag.vertex_count();
  std::vector<char> seen(n, 0);
  bool ok = static_cast<int>(order.size()) == n;
  for (Vertex v : order) {
    if (!ok) break;
    ok = v >= 0 && v < n && !seen[v];
    if (ok) seen[v] = 1;
  }
  if (!ok) {
    throw Error(ErrorCode::kInvalidArgument,
                "ordering is not a permutation of the vertices");
  }
}

// Stable counting sort of clique indices by one tuple coordinate.
void sort_by_coordinate(std::vector<std::size_t>& ids,
                        const std::vector<int>& flat, int k, int coord, int n) {
  std::vector<std::size_t> count(n + 1, 0);
  for (std::size_t c : ids) ++count[flat[c * k + coord] + 1];
  for (int p = 1; p <= n; ++p) count[p] += count[p - 1];
  std::vector<std::size_t> out(ids.size());
  for (std::size_t c : ids) out[count[flat[c * k + coord]]++] = c;
  ids.swap(out);
}

std::vector<Vertex> block_dp(const Dag& dag, std::span<const Vertex> order,
                             int k, std::span<const std::int64_t> weight) {
  const int n = dag.vertex_count();
  require_order(dag, order);
  if (n == 0) return {};
  k = std::max(k, 2);
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;

  auto cliques = enumerate_k_cliques(dag, k);
  if (cliques.empty()) {
    // No k-clique: every clique is smaller, take the heaviest.
    std::vector<Vertex> best;
    std::int64_t best_weight = -1;
    for (int size = 1; size < k; ++size) {
      for (const auto& c : enumerate_k_cliques(dag, size)) {
        std::int64_t w = 0;
        for (Vertex v : c) w += weight[v];
        if (w > best_weight) {
          best_weight = w;
          best = c;
        }
      }
    }
    return best;
  }

  // Tuples of ordering positions, ascending.
  const std::size_t count = cliques.size();
  std::vector<int> flat(count * k);
  for (std::size_t c = 0; c < count; ++c) {
    for (int t = 0; t < k; ++t) flat[c * k + t] = pos[cliques[c][t]];
    std::sort(flat.begin() + static_cast<std::ptrdiff_t>(c * k),
              flat.begin() + static_cast<std::ptrdiff_t>((c + 1) * k));
  }
  auto at = [&](std::size_t c, int t) { return flat[c * k + t]; };

  // Table order: lexicographic by reversed tuple (last coordinate most
  // significant), built by LSD counting sorts.
  std::vector<std::size_t> table(count);
  for (std::size_t c = 0; c < count; ++c) table[c] = c;
  for (int t = 0; t < k; ++t) sort_by_coordinate(table, flat, k, t, n);

  // Blocks: runs sharing the last k-1 coordinates.
  std::vector<std::size_t> block_start;
  std::vector<int> block_of(count);
  for (std::size_t r = 0; r < count; ++r) {
    bool fresh = r == 0;
    for (int t = 1; t < k && !fresh; ++t) {
      fresh = at(table[r], t) != at(table[r - 1], t);
    }
    if (fresh) block_start.push_back(r);
    block_of[table[r]] = static_cast<int>(block_start.size()) - 1;
  }
  const std::size_t blocks = block_start.size();

  // Relevant block of (u1..uk) is the block keyed (u1..u_{k-1}). Sorting by
  // the reversed first k-1 coordinates lines cliques up with block order.
  std::vector<std::size_t> by_prefix(count);
  for (std::size_t c = 0; c < count; ++c) by_prefix[c] = c;
  for (int t = 0; t + 1 < k; ++t) sort_by_coordinate(by_prefix, flat, k, t, n);
  // -1: prefix key below block key, 0: equal, 1: above. Compared from the
  // most significant (last) coordinate down.
  auto compare = [&](std::size_t clique, std::size_t block) {
    std::size_t rep = table[block_start[block]];
    for (int t = k - 2; t >= 0; --t) {
      int a = at(clique, t);
      int b = at(rep, t + 1);
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  };
  std::vector<int> relevant(count, -1);
  std::size_t b = 0;
  for (std::size_t c : by_prefix) {
    while (b < blocks && compare(c, b) > 0) ++b;
    if (b < blocks && compare(c, b) == 0) relevant[c] = static_cast<int>(b);
  }

  // One sweep in table order; a relevant block always precedes its user.
  std::vector<std::int64_t> label(count);
  std::vector<std::int64_t> block_max(blocks, -1);
  std::vector<std::size_t> block_arg(blocks, 0);
  for (std::size_t r = 0; r < count; ++r) {
    std::size_t c = table[r];
    int rb = relevant[c];
    if (rb >= 0) {
      if (rb >= block_of[c]) internal_error("relevant block not yet labeled");
      label[c] = weight[order[at(c, k - 1)]] + block_max[rb];
    } else {
      label[c] = 0;
      for (int t = 0; t < k; ++t) label[c] += weight[order[at(c, t)]];
    }
    int own = block_of[c];
    if (label[c] > block_max[own]) {
      block_max[own] = label[c];
      block_arg[own] = c;
    }
  }

  std::size_t best = table[0];
  for (std::size_t r = 1; r < count; ++r) {
    if (label[table[r]] > label[best]) best = table[r];
  }
  std::vector<Vertex> result;
  std::size_t c = best;
  while (relevant[c] >= 0) {
    result.push_back(order[at(c, k - 1)]);
    c = block_arg[relevant[c]];
  }
  for (int t = 0; t < k; ++t) result.push_back(order[at(c, t)]);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Vertex> solve_component(const Dag& sub, bool strict, int& k_used) {
  std::vector<Vertex> order = topological_sort(sub);
  if (!strict) {
    for (int k : {2, 3}) {
      auto candidate = max_clique_with_ordering(sub, order, k);
      if (is_clique(sub, candidate)) {
        k_used = k;
        return candidate;
      }
    }
  }
  LambdaResult lr = compute_lambda(sub);
  int k = lr.max_forcing_ratio ? static_cast<int>(lr.lambda.floor()) + 1 : 2;
  auto candidate = max_clique_with_ordering(sub, order, k);
  if (!is_clique(sub, candidate)) {
    internal_error("topological sort not " + std::to_string(k) +
                   "-clique extendable at lambda " + lr.lambda.to_string());
  }
  k_used = k;
  return candidate;
}

}  // namespace

std::vector<std::vector<Vertex>> enumerate_k_cliques(const Dag& dag, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  const int n = dag.vertex_count();
  std::vector<std::vector<Vertex>> result;
  auto adj = undirected_adjacency(dag);
  std::vector<int> rank = degeneracy_rank(adj);
  std::vector<std::vector<Vertex>> later(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : adj[v]) {
      if (rank[w] > rank[v]) later[v].push_back(w);
    }
  }
  std::vector<Vertex> clique;
  std::function<void(const std::vector<Vertex>&)> extend =
      [&](const std::vector<Vertex>& cand) {
        if (static_cast<int>(clique.size()) == k) {
          std::vector<Vertex> sorted = clique;
          std::sort(sorted.begin(), sorted.end());
          result.push_back(std::move(sorted));
          return;
        }
        if (clique.size() + cand.size() < static_cast<std::size_t>(k)) return;
        for (Vertex u : cand) {
          std::vector<Vertex> next;
          std::set_intersection(cand.begin(), cand.end(), later[u].begin(),
                                later[u].end(), std::back_inserter(next));
          clique.push_back(u);
          extend(next);
          clique.pop_back();
        }
      };
  for (Vertex v = 0; v < n; ++v) {
    clique.assign(1, v);
    extend(later[v]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Vertex> max_clique_with_ordering(const Dag& dag,
                                             std::span<const Vertex> order,
                                             int k) {
  std::vector<std::int64_t> ones(dag.vertex_count(), 1);
  return block_dp(dag, order, k, ones);
}

std::vector<Vertex> max_weight_clique_with_ordering(
    const Dag& dag, std::span<const Vertex> order, int k,
    std::span<const std::int64_t> weights) {
  if (static_cast<int>(weights.size()) != dag.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "need one weight per vertex");
  }
  for (std::size_t v = 0; v < weights.size(); ++v) {
    if (weights[v] <= 0) {
      throw Error(ErrorCode::kNonpositiveWeight,
                  "weight of vertex " + std::to_string(v) + " is not positive",
                  {static_cast<long long>(v)});
    }
  }
  return block_dp(dag, order, k, weights);
}

CliqueSolution max_clique_exact(const Dag& dag, bool strict) {
  CliqueSolution best;
  for (const auto& members : connected_components(dag)) {
    std::vector<Vertex> local;
    int k_used = 1;
    if (members.size() == 1) {
      local = {0};
    } else {
      local = solve_component(induced_subdag(dag, members), strict, k_used);
    }
    if (local.size() > best.vertices.size()) {
      best.vertices.clear();
      for (Vertex v : local) best.vertices.push_back(members[v]);
      std::sort(best.vertices.begin(), best.vertices.end());
    }
    best.k = std::max(best.k, k_used);
  }
  return best;
}

Dag prune_short_edges(const Dag& dag, std::span<const std::int64_t> alpha,
                      std::int64_t min_span) {
  std::vector<Edge> kept;
  for (const Edge& e : dag.edges()) {
    if (alpha[e.to] - alpha[e.from] >= min_span) kept.push_back(e);
  }
  return Dag::build(dag.vertex_count(), kept, dag.labels());
}

CliqueSolution max_clique_approx(const Dag& dag, int factor,
                                 std::span<const std::int64_t> alpha,
                                 Thresholds th) {
  if (factor < 1) {
    throw Error(ErrorCode::kInvalidFactor, "approximation factor must be >= 1");
  }
  if (static_cast<int>(alpha.size()) != dag.vertex_count()) {
    throw Error(ErrorCode::kMissingVertex, "assignment size mismatch");
  }
  return max_clique_exact(prune_short_edges(dag, alpha, factor * th.t1));
}

CliqueSolution max_clique_approx(const Dag& dag, int factor) {
  Rational lambda = compute_lambda(dag).lambda;
  if (factor < 1 || Rational(factor) > lambda) {
    throw Error(ErrorCode::kInvalidFactor,
                "factor " + std::to_string(factor) + " outside 1.." +
                    lambda.to_string());
  }
  LambdaCertificate cert = certify_lambda(dag);
  return max_clique_approx(dag, factor, cert.assignment.alpha, cert.thresholds);
}

}  // namespace dtg
