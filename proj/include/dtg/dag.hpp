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

#ifndef DTG_DAG_HPP_
#define DTG_DAG_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dtg {

using Vertex = int;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Unordered non-adjacent pair, stored with u < v.
struct Hop {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Hop&, const Hop&) = default;
};

// Immutable directed acyclic graph over dense vertex ids 0..n-1.
//
// Edge membership is answered from a packed n x n bit matrix, so has_edge and
// adjacent are O(1). Out- and in-adjacency lists are sorted by vertex id.
class Dag {
 public:
  Dag() = default;

  // Validates and builds. Throws Error with kVertexOutOfRange, kSelfLoop,
  // kDuplicateEdge, or kCycleDetected (detail = vertices of one directed
  // cycle, in cycle order). `labels` is either empty or has n entries.
  static Dag build(int n, std::span<const Edge> edges,
                   std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const {
    return static_cast<std::int64_t>(edges_.size());
  }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  // Edges in construction order.
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  // Edge in either direction.
  bool adjacent(Vertex u, Vertex v) const {
    return has_edge(u, v) || has_edge(v, u);
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

// Kahn's algorithm, taking the smallest available vertex id first.
std::vector<Vertex> topological_sort(const Dag& dag);

// All hops, lexicographically ordered.
std::vector<Hop> hops(const Dag& dag);
std::int64_t hop_count(const Dag& dag);

bool is_transitive(const Dag& dag);

// Level of each vertex when the dag models a weak order ((u,v) is an edge iff
// level(u) < level(v)); nullopt for nondegenerate dags.
struct DegeneracyClass {
  std::optional<std::vector<int>> levels;
  bool degenerate() const { return levels.has_value(); }
};
DegeneracyClass classify_degenerate(const Dag& dag);

// Connected components of the underlying undirected graph, each sorted, listed
// by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Dag& dag);

// Sub-dag induced on `vertices`; vertex i of the result is vertices[i].
Dag induced_subdag(const Dag& dag, std::span<const Vertex> vertices);

// True iff every pair of distinct members is adjacent.
bool is_clique(const Dag& dag, std::span<const Vertex> vertices);
// True iff no pair of members is adjacent.
bool is_independent(const Dag& dag, std::span<const Vertex> vertices);

}  // namespace dtg

#endif  // DTG_DAG_HPP_
