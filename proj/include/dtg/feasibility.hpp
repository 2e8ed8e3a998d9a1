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

#ifndef DTG_FEASIBILITY_HPP_
#define DTG_FEASIBILITY_HPP_

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "dtg/dag.hpp"
#include "dtg/rational.hpp"

namespace dtg {

struct Thresholds {
  std::int64_t t1 = 1;
  std::int64_t t2 = 1;

  // Throws Error(kInvalidThresholds) unless 0 < t1 <= t2.
  void validate() const;
  Rational ratio() const { return Rational(t2, t1); }
  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

// Utility value per vertex. Produced assignments are the minimum-weight path
// values of the constraint graph, so every entry lies in [-(n-1)t1, 0].
struct UtilityAssignment {
  std::vector<std::int64_t> alpha;
  friend bool operator==(const UtilityAssignment&,
                         const UtilityAssignment&) = default;
};

enum class StepKind { kEdge, kHop };

// One step of a forcing cycle: from `vertex` to the vertex of the next step
// (cyclically), either along a dag edge or across a hop.
struct ForcingStep {
  Vertex vertex = 0;
  StepKind kind = StepKind::kEdge;
  friend bool operator==(const ForcingStep&, const ForcingStep&) = default;
};

// Simple cycle of dag edges and hops; the infeasibility certificate.
struct ForcingCycle {
  std::vector<ForcingStep> steps;

  int edge_count() const;
  int hop_count() const;
  // edges / hops, reduced. Requires hop_count() >= 1.
  Rational ratio() const;
  friend bool operator==(const ForcingCycle&, const ForcingCycle&) = default;
};

struct FeasibilityStats {
  int passes = 0;               // rows computed after the initial one
  int stopping_index = 0;       // floor((n-1)/(r+1)) + 1
  std::int64_t table_cells = 0;
};

class FeasibilityResult {
 public:
  FeasibilityResult(UtilityAssignment a, FeasibilityStats s)
      : outcome_(std::move(a)), stats_(s) {}
  FeasibilityResult(ForcingCycle c, FeasibilityStats s)
      : outcome_(std::move(c)), stats_(s) {}

  bool feasible() const {
    return std::holds_alternative<UtilityAssignment>(outcome_);
  }
  const UtilityAssignment& assignment() const {
    return std::get<UtilityAssignment>(outcome_);
  }
  const ForcingCycle& cycle() const { return std::get<ForcingCycle>(outcome_); }
  const FeasibilityStats& stats() const { return stats_; }

 private:
  std::variant<UtilityAssignment, ForcingCycle> outcome_;
  FeasibilityStats stats_;
};

// Decides whether the dag has a satisfying utility function for `th`.
// Returns the minimum-path assignment, or a forcing cycle whose ratio exceeds
// t2/t1. Runs at most stopping_index + 1 passes of the hop-indexed table,
// each linear in n + m.
FeasibilityResult check_feasible(const Dag& dag, Thresholds th);

// check_feasible without the t1 <= t2 model constraint: accepts any t1 > 0,
// t2 >= 0. Used to extract exact-ratio cycles when the ratio is at most 1.
FeasibilityResult solve_difference_constraints(const Dag& dag, Thresholds th);

// floor((n-1) t1 / (t1 + t2)) + 1.
int stopping_index(int n, Thresholds th);

// Dag variant on the weight -t1 slice (reversed dag edges):
// w'(x) = min over y reachable from x in the dag of w(y) - t1 * dist(x, y),
// including y = x.
std::vector<std::int64_t> relax_dag_slice(const Dag& dag,
                                          std::span<const std::int64_t> w,
                                          std::int64_t t1);

// General variant on the weight t2 slice (both directions of every hop).
// With loops, w'(v) = min(w(v), min over hops {u,v} of w(u) + t2); without
// loops the w(v) term is dropped. Uses one sorted order of w and a marking
// scan, so the pass costs O(n + m) plus the sort.
std::vector<std::int64_t> relax_hop_slice(const Dag& dag,
                                          std::span<const std::int64_t> w,
                                          std::int64_t t2,
                                          bool with_loops = true);

struct Violation {
  enum class Kind { kEdgeTooShort, kHopTooLong };
  Kind kind;
  Vertex u;
  Vertex v;
  std::int64_t difference;  // alpha(v) - alpha(u)
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Every violated constraint: edges (u,v) with alpha(v) - alpha(u) < t1 and
// hops {u,v} (u < v) with |alpha(v) - alpha(u)| > t2. Empty means satisfied.
// Throws Error(kMissingVertex) if alpha does not cover every vertex.
std::vector<Violation> verify_assignment(const Dag& dag, Thresholds th,
                                         std::span<const std::int64_t> alpha);

// Checks simplicity and step kinds and returns the ratio. Throws
// Error(kNotSimple) or Error(kWrongStepKind, detail = {position}).
Rational verify_forcing_cycle(const Dag& dag, const ForcingCycle& cycle);

}  // namespace dtg

#endif  // DTG_FEASIBILITY_HPP_
