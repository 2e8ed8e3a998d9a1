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

#ifndef DTG_SRC_LAYERED_TABLE_HPP_
#define DTG_SRC_LAYERED_TABLE_HPP_

// Hop-indexed dynamic-programming table over the constraint graph G_d.
//
// Row i holds, for every vertex v, the minimum weight of a walk in G_d ending
// at v that uses (at most, or exactly, depending on `with_loops`) i edges of
// weight t2. Row 0 is the dag relaxation of the all-zero vector. Each further
// row is one hop-slice relaxation followed by one dag-slice relaxation. Every
// cell keeps a back-link so the walk realizing it can be rebuilt exactly.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "dtg/dag.hpp"
#include "dtg/feasibility.hpp"

namespace dtg::detail {

inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// One edge of G_d. kEdge steps have weight -t1 and run against a dag edge
// (from = head of the dag edge); kHop steps have weight t2.
struct GdStep {
  Vertex from;
  Vertex to;
  StepKind kind;
};

// Vertices ordered by ascending weight, ties by id, kInf entries last.
// Counting sort when the finite key range is O(n + extra), else a comparison
// sort.
std::vector<Vertex> sort_by_weight(std::span<const std::int64_t> w,
                                   std::size_t extra);

class LayeredTable {
 public:
  LayeredTable(const Dag& dag, Thresholds th, bool with_loops);

  // Computes the next row from the last one.
  void advance();

  int row_count() const { return static_cast<int>(values_.size()); }
  std::span<const std::int64_t> row(int i) const { return values_[i]; }
  std::int64_t cells() const {
    return static_cast<std::int64_t>(values_.size()) * dag_.vertex_count();
  }

  // G_d edges of the walk realizing cell (i, v), in walk order.
  std::vector<GdStep> walk_to(int i, Vertex v) const;

 private:
  enum class Link : std::uint8_t { kOrigin, kStay, kHop, kEdge };
  struct Back {
    Vertex pred;
    Link link;
  };

  // In place over (value, back) of one row.
  void relax_dag(std::vector<std::int64_t>& value, std::vector<Back>& back) const;

  const Dag& dag_;
  Thresholds th_;
  bool with_loops_;
  std::vector<Vertex> reverse_topo_;
  std::vector<std::vector<std::int64_t>> values_;
  std::vector<std::vector<Back>> backs_;
  mutable std::vector<std::uint32_t> mark_;
  mutable std::uint32_t stamp_ = 0;
};

// Splits a walk into simple cycles (closed in the order they appear) and
// returns them; the leftover path is discarded.
std::vector<std::vector<GdStep>> split_cycles(std::span<const GdStep> walk);

// Reverses a G_d cycle into forcing-cycle orientation and rotates it to begin
// at its smallest vertex.
ForcingCycle to_forcing_cycle(std::span<const GdStep> gd_cycle);

}  // namespace dtg::detail

#endif  // DTG_SRC_LAYERED_TABLE_HPP_
