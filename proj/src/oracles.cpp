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

#include "dtg/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include "dtg/clique.hpp"
#include "dtg/error.hpp"

namespace dtg::oracle {
namespace {

void require_size(const Dag& dag, int limit, const char* what) {
  if (dag.vertex_count() > limit) {
    throw Error(ErrorCode::kTooLarge,
                std::string(what) + " is limited to n <= " +
                    std::to_string(limit) + " (got " +
                    std::to_string(dag.vertex_count()) + ")");
  }
}

// Strict weak order test by negative transitivity over all triples: whenever
// a -> c, every b satisfies a -> b or b -> c.
bool brute_is_weak_order(const Dag& dag) {
  const int n = dag.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c : dag.out(a)) {
      for (Vertex b = 0; b < n; ++b) {
        if (b == a || b == c) continue;
        if (!dag.has_edge(a, b) && !dag.has_edge(b, c)) return false;
      }
    }
  }
  return true;
}

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// Fewest groups of pairwise compatible vertices, by backtracking.
Optimum min_partition(const Dag& dag,
                      const std::function<bool(Vertex, Vertex)>& compatible) {
  const int n = dag.vertex_count();
  Optimum best;
  if (n == 0) return best;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Vertex>> groups(k);
    std::function<bool(Vertex)> place = [&](Vertex v) {
      if (v == n) return true;
      for (int g = 0; g < k; ++g) {
        bool ok = std::all_of(groups[g].begin(), groups[g].end(),
                              [&](Vertex u) { return compatible(u, v); });
        if (!ok) continue;
        groups[g].push_back(v);
        if (place(v + 1)) return true;
        groups[g].pop_back();
        // Symmetry: an empty group is interchangeable with any later one.
        if (groups[g].empty()) break;
      }
      return false;
    };
    if (place(0)) {
      best.value = k;
      best.witness = std::move(groups);
      return best;
    }
  }
  internal_error("partition search exhausted");
}

Optimum best_subset(const Dag& dag, bool want_clique) {
  const int n = dag.vertex_count();
  Optimum best;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best.value) continue;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (mask & (1U << v)) members.push_back(v);
    }
    bool ok = want_clique ? is_clique(dag, members) : is_independent(dag, members);
    if (ok) {
      best.value = size;
      best.witness = {members};
    }
  }
  return best;
}

}  // namespace

std::optional<Rational> brute_max_forcing_ratio(const Dag& dag) {
  require_size(dag, 12, "forcing-cycle enumeration");
  const int n = dag.vertex_count();
  std::optional<Rational> best;
  std::vector<char> on_path(n, 0);
  // Cycles are rooted at their smallest vertex.
  for (Vertex s = 0; s < n; ++s) {
    std::function<void(Vertex, int, int)> dfs = [&](Vertex u, int edges,
                                                    int hop_steps) {
      for (Vertex w = s; w < n; ++w) {
        if (w == u) continue;
        bool edge = dag.has_edge(u, w);
        bool hop = !edge && !dag.has_edge(w, u);
        if (!edge && !hop) continue;
        int e = edges + (edge ? 1 : 0);
        int h = hop_steps + (hop ? 1 : 0);
        if (w == s) {
          if (h > 0) {
            Rational r(e, h);
            if (!best || *best < r) best = r;
          }
          continue;
        }
        if (on_path[w]) continue;
        on_path[w] = 1;
        dfs(w, e, h);
        on_path[w] = 0;
      }
    };
    on_path[s] = 1;
    dfs(s, 0, 0);
    on_path[s] = 0;
  }
  return best;
}

Rational brute_lambda(const Dag& dag) {
  require_size(dag, 12, "brute_lambda");
  if (brute_is_weak_order(dag)) return Rational(0);
  auto ratio = brute_max_forcing_ratio(dag);
  if (!ratio) internal_error("nondegenerate dag without forcing cycle");
  return std::max(*ratio, Rational(1));
}

std::optional<std::vector<std::int64_t>> brute_feasible(const Dag& dag,
                                                        Thresholds th) {
  require_size(dag, 300, "brute_feasible");
  const int n = dag.vertex_count();
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::vector<std::int64_t>> dist(
      n, std::vector<std::int64_t>(n, kInf));
  for (Vertex u = 0; u < n; ++u) {
    dist[u][u] = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (dag.has_edge(v, u)) {
        dist[u][v] = -th.t1;
      } else if (!dag.has_edge(u, v)) {
        dist[u][v] = th.t2;
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (dist[i][k] >= kInf) continue;
      for (int j = 0; j < n; ++j) {
        if (dist[k][j] >= kInf) continue;
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  std::vector<std::int64_t> alpha(n, 0);
  for (int v = 0; v < n; ++v) {
    if (dist[v][v] < 0) return std::nullopt;
    for (int u = 0; u < n; ++u) alpha[v] = std::min(alpha[v], dist[u][v]);
  }
  return alpha;
}

Rational binary_search_lambda(const Dag& dag) {
  require_size(dag, 300, "binary_search_lambda");
  if (brute_is_weak_order(dag)) return Rational(0);
  const int n = dag.vertex_count();
  std::vector<Rational> candidates;
  for (int i = 1; 2 * i <= n; ++i) {
    for (int j = i; i + j <= n; ++j) candidates.emplace_back(j, i);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::size_t lo = 0;
  std::size_t hi = candidates.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    Thresholds th{candidates[mid].den(), candidates[mid].num()};
    if (brute_feasible(dag, th)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == candidates.size()) internal_error("no candidate ratio satisfiable");
  return candidates[lo];
}

Optimum brute_max_clique(const Dag& dag) {
  require_size(dag, 12, "brute_max_clique");
  return best_subset(dag, true);
}

Optimum brute_independent_set(const Dag& dag) {
  require_size(dag, 12, "brute_independent_set");
  return best_subset(dag, false);
}

Optimum brute_chromatic(const Dag& dag) {
  require_size(dag, 8, "brute_chromatic");
  return min_partition(dag, [&](Vertex u, Vertex v) { return !dag.adjacent(u, v); });
}

Optimum brute_clique_cover(const Dag& dag) {
  require_size(dag, 8, "brute_clique_cover");
  return min_partition(dag, [&](Vertex u, Vertex v) { return dag.adjacent(u, v); });
}

bool is_k_clique_extendable(const Dag& dag, std::span<const Vertex> order, int k) {
  const int n = dag.vertex_count();
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "order must list every vertex once");
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  if (k <= 1) {
    // Cliques of size 1 overlap in nothing; every ordered pair must be adjacent.
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (!dag.adjacent(a, b)) return false;
      }
    }
    return true;
  }
  for (const auto& x : enumerate_k_cliques(dag, k)) {
    auto first = std::min_element(x.begin(), x.end(),
                                  [&](Vertex p, Vertex q) { return pos[p] < pos[q]; });
    Vertex a = *first;
    std::vector<Vertex> shared;
    int last = -1;
    for (Vertex v : x) {
      if (v == a) continue;
      shared.push_back(v);
      last = std::max(last, pos[v]);
    }
    for (int i = last + 1; i < n; ++i) {
      Vertex b = order[i];
      bool joins = std::all_of(shared.begin(), shared.end(),
                               [&](Vertex s) { return dag.adjacent(s, b); });
      if (joins && !dag.adjacent(a, b)) return false;
    }
  }
  return true;
}

std::int64_t labeled_dag_count(int n) {
  std::vector<std::int64_t> a(n + 1, 0);
  a[0] = 1;
  auto binom = [](int m, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
  };
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= m; ++k) {
      std::int64_t term = binom(m, k) * (std::int64_t{1} << (k * (m - k))) * a[m - k];
      a[m] += (k % 2 == 1) ? term : -term;
    }
  }
  return a[n];
}

std::vector<Dag> all_dags(int n) {
  if (n < 0 || n > 4) {
    throw Error(ErrorCode::kBadParams, "all_dags supports 0 <= n <= 4");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  int total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  std::vector<Dag> result;
  for (int code = 0; code < total; ++code) {
    std::vector<Edge> edges;
    int c = code;
    for (auto [u, v] : pairs) {
      int choice = c % 3;
      c /= 3;
      if (choice == 1) edges.push_back({u, v});
      if (choice == 2) edges.push_back({v, u});
    }
    try {
      result.push_back(Dag::build(n, edges));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCycleDetected) throw;
    }
  }
  return result;
}

Dag random_dag(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) {
    throw Error(ErrorCode::kBadParams, "random dag needs n >= 0, 0 <= p <= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> perm = random_permutation(n, rng);
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[perm[i]] = i;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit(rng) >= p) continue;
      if (position[u] < position[v]) {
        edges.push_back({u, v});
      } else {
        edges.push_back({v, u});
      }
    }
  }
  return Dag::build(n, edges);
}

Dag path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Dag::build(n, edges);
}

Dag transitive_tournament(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Dag::build(n, edges);
}

Dag chain_plus_isolated(int n) {
  if (n < 1) throw Error(ErrorCode::kBadParams, "chain needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) {
    for (Vertex v = u + 1; v + 1 < n; ++v) edges.push_back({u, v});
  }
  return Dag::build(n, edges);
}

Dag edgeless(int n) { return Dag::build(n, {}); }

Dag from_colored_graph(int n, const std::vector<Edge>& undirected,
                       const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != n) {
    throw Error(ErrorCode::kBadParams, "need one color per vertex");
  }
  std::vector<Edge> edges;
  for (const Edge& e : undirected) {
    if (colors[e.from] == colors[e.to]) {
      throw Error(ErrorCode::kBadParams, "coloring is not proper");
    }
    if (colors[e.from] < colors[e.to]) {
      edges.push_back(e);
    } else {
      edges.push_back({e.to, e.from});
    }
  }
  return Dag::build(n, edges);
}

Dag random_colored_dag(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) {
    throw Error(ErrorCode::kBadParams, "coloring family needs n >= 0, 0 <= p <= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> colors(n);
  for (int& c : colors) c = static_cast<int>(rng() % 3);
  std::vector<Edge> undirected;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (colors[u] != colors[v] && unit(rng) < p) undirected.push_back({u, v});
    }
  }
  return from_colored_graph(n, undirected, colors);
}

Dag generate(const std::string& family, int n, double p, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kBadParams, "family needs n >= 1");
  if (family == "path") return path(n);
  if (family == "chain") return chain_plus_isolated(n);
  if (family == "tournament") return transitive_tournament(n);
  if (family == "edgeless") return edgeless(n);
  if (family == "random") return random_dag(n, p, seed);
  if (family == "coloring") return random_colored_dag(n, p, seed);
  throw Error(ErrorCode::kBadParams, "unknown family '" + family + "'");
}

}  // namespace dtg::oracle
