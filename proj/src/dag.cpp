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

#include "dtg/dag.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "dtg/error.hpp"

namespace dtg {
namespace {

// Iterative DFS returning the vertices of some directed cycle, or empty.
std::vector<Vertex> find_cycle(int n,
                               const std::vector<std::vector<Vertex>>& out) {
  enum Color : char { kWhite, kGray, kBlack };
  std::vector<Color> color(n, kWhite);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != kWhite) continue;
    std::vector<Vertex> stack{root};
    color[root] = kGray;
    while (!stack.empty()) {
      Vertex u = stack.back();
      if (next[u] == out[u].size()) {
        color[u] = kBlack;
        stack.pop_back();
        continue;
      }
      Vertex w = out[u][next[u]++];
      if (color[w] == kWhite) {
        parent[w] = u;
        color[w] = kGray;
        stack.push_back(w);
      } else if (color[w] == kGray) {
        std::vector<Vertex> cycle;
        for (Vertex x = u; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace

Dag Dag::build(int n, std::span<const Edge> edges,
               std::vector<std::string> labels) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(n) + " labels, got " +
                    std::to_string(labels.size()));
  }
  Dag dag;
  dag.n_ = n;
  dag.out_.resize(n);
  dag.in_.resize(n);
  std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  dag.bits_.assign((nn + 63) / 64, 0);
  dag.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge (" + std::to_string(e.from) + "," +
                      std::to_string(e.to) + ") outside 0.." +
                      std::to_string(n - 1));
    }
    if (e.from == e.to) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at vertex " + std::to_string(e.from),
                  {e.from});
    }
    if (dag.has_edge(e.from, e.to)) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge (" + std::to_string(e.from) + "," +
                      std::to_string(e.to) + ")",
                  {e.from, e.to});
    }
    std::size_t bit = static_cast<std::size_t>(e.from) * n + e.to;
    dag.bits_[bit / 64] |= std::uint64_t{1} << (bit % 64);
    dag.out_[e.from].push_back(e.to);
    dag.in_[e.to].push_back(e.from);
    dag.edges_.push_back(e);
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(dag.out_[v].begin(), dag.out_[v].end());
    std::sort(dag.in_[v].begin(), dag.in_[v].end());
  }
  if (auto cycle = find_cycle(n, dag.out_); !cycle.empty()) {
    std::string msg = "directed cycle:";
    for (Vertex v : cycle) msg += " " + std::to_string(v);
    throw Error(ErrorCode::kCycleDetected, msg,
                std::vector<long long>(cycle.begin(), cycle.end()));
  }
  dag.labels_ = std::move(labels);
  return dag;
}

bool Dag::has_edge(Vertex u, Vertex v) const {
  std::size_t bit = static_cast<std::size_t>(u) * n_ + v;
  return (bits_[bit / 64] >> (bit % 64)) & 1U;
}

std::string Dag::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<Vertex> topological_sort(const Dag& dag) {
  const int n = dag.vertex_count();
  std::vector<int> indegree(n);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    indegree[v] = static_cast<int>(dag.in(v).size());
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    Vertex u = ready.top();
    ready.pop();
    order.push_back(u);
    for (Vertex w : dag.out(u)) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  return order;
}

std::vector<Hop> hops(const Dag& dag) {
  std::vector<Hop> result;
  result.reserve(static_cast<std::size_t>(hop_count(dag)));
  for (Vertex u = 0; u < dag.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < dag.vertex_count(); ++v) {
      if (!dag.adjacent(u, v)) result.push_back({u, v});
    }
  }
  return result;
}

std::int64_t hop_count(const Dag& dag) {
  std::int64_t n = dag.vertex_count();
  return n * (n - 1) / 2 - dag.edge_count();
}

bool is_transitive(const Dag& dag) {
  for (Vertex u = 0; u < dag.vertex_count(); ++u) {
    for (Vertex v : dag.out(u)) {
      for (Vertex w : dag.out(v)) {
        if (!dag.has_edge(u, w)) return false;
      }
    }
  }
  return true;
}

DegeneracyClass classify_degenerate(const Dag& dag) {
  const int n = dag.vertex_count();
  // Longest path ending at each vertex, in topological order.
  std::vector<int> level(n, 0);
  for (Vertex u : topological_sort(dag)) {
    for (Vertex w : dag.out(u)) level[w] = std::max(level[w], level[u] + 1);
  }
  int depth = n == 0 ? 0 : *std::max_element(level.begin(), level.end()) + 1;
  std::vector<std::int64_t> size(depth, 0);
  for (int l : level) ++size[l];
  // Every edge runs upward by construction; the dag is a weak order iff it
  // contains every upward cross-level pair.
  std::int64_t cross = 0;
  std::int64_t below = 0;
  for (int l = 0; l < depth; ++l) {
    cross += below * size[l];
    below += size[l];
  }
  if (cross != dag.edge_count()) return {};
  return {std::move(level)};
}

std::vector<std::vector<Vertex>> connected_components(const Dag& dag) {
  const int n = dag.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> result;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    int id = static_cast<int>(result.size());
    std::vector<Vertex> members{root};
    comp[root] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      Vertex u = members[i];
      for (auto side : {dag.out(u), dag.in(u)}) {
        for (Vertex w : side) {
          if (comp[w] == -1) {
            comp[w] = id;
            members.push_back(w);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  return result;
}

Dag induced_subdag(const Dag& dag, std::span<const Vertex> vertices) {
  std::vector<int> index(dag.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex v : vertices) {
    if (dag.has_labels()) labels.push_back(dag.label(v));
    for (Vertex w : dag.out(v)) {
      if (index[w] != -1) edges.push_back({index[v], index[w]});
    }
  }
  return Dag::build(static_cast<int>(vertices.size()), edges,
                    std::move(labels));
}

bool is_clique(const Dag& dag, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!dag.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Dag& dag, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] ||
          dag.adjacent(vertices[i], vertices[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace dtg
