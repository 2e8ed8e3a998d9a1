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

#include "dtg/feasibility.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dtg/error.hpp"
#include "layered_table.hpp"

namespace dtg {

using detail::kInf;

void Thresholds::validate() const {
  if (t1 <= 0 || t2 < t1) {
    throw Error(ErrorCode::kInvalidThresholds,
                "thresholds must satisfy 0 < t1 <= t2 (got t1=" +
                    std::to_string(t1) + ", t2=" + std::to_string(t2) + ")");
  }
}

int ForcingCycle::edge_count() const {
  return static_cast<int>(std::count_if(
      steps.begin(), steps.end(),
      [](const ForcingStep& s) { return s.kind == StepKind::kEdge; }));
}

int ForcingCycle::hop_count() const {
  return static_cast<int>(steps.size()) - edge_count();
}

Rational ForcingCycle::ratio() const {
  if (hop_count() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "forcing cycle without hops");
  }
  return Rational(edge_count(), hop_count());
}

int stopping_index(int n, Thresholds th) {
  if (n <= 1) return 1;
  return static_cast<int>(static_cast<std::int64_t>(n - 1) * th.t1 /
                          (th.t1 + th.t2)) +
         1;
}

FeasibilityResult solve_difference_constraints(const Dag& dag, Thresholds th) {
  if (th.t1 <= 0 || th.t2 < 0) {
    throw Error(ErrorCode::kInvalidThresholds,
                "difference constraints need t1 > 0 and t2 >= 0");
  }
  const int n = dag.vertex_count();
  FeasibilityStats stats;
  stats.stopping_index = stopping_index(n, th);
  detail::LayeredTable table(dag, th, /*with_loops=*/true);
  auto finish_feasible = [&](int row) {
    stats.table_cells = table.cells();
    auto r = table.row(row);
    return FeasibilityResult(UtilityAssignment{{r.begin(), r.end()}}, stats);
  };
  for (int i = 1; i <= stats.stopping_index + 1; ++i) {
    table.advance();
    ++stats.passes;
    auto prev = table.row(i - 1);
    auto cur = table.row(i);
    if (std::equal(prev.begin(), prev.end(), cur.begin())) {
      return finish_feasible(i);
    }
  }
  // Still improving past the stopping index: G_d has a negative cycle.
  const int last = stats.stopping_index + 1;
  auto prev = table.row(last - 1);
  auto cur = table.row(last);
  Vertex improved = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (cur[v] < prev[v]) {
      improved = v;
      break;
    }
  }
  if (improved == -1) internal_error("table changed without improving");
  std::vector<detail::GdStep> walk = table.walk_to(last, improved);
  // The walk beats every walk with fewer hops, so removing its cycles cannot
  // leave only nonnegative ones.
  for (const auto& gd_cycle : detail::split_cycles(walk)) {
    std::int64_t weight = 0;
    for (const auto& step : gd_cycle) {
      weight += step.kind == StepKind::kHop ? th.t2 : -th.t1;
    }
    if (weight < 0) {
      stats.table_cells = table.cells();
      return FeasibilityResult(detail::to_forcing_cycle(gd_cycle), stats);
    }
  }
  internal_error("improving walk contains no negative cycle");
}

FeasibilityResult check_feasible(const Dag& dag, Thresholds th) {
  th.validate();
  return solve_difference_constraints(dag, th);
}

std::vector<std::int64_t> relax_dag_slice(const Dag& dag,
                                          std::span<const std::int64_t> w,
                                          std::int64_t t1) {
  std::vector<std::int64_t> out(w.begin(), w.end());
  std::vector<Vertex> order = topological_sort(dag);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (Vertex y : dag.out(*it)) {
      if (out[y] < kInf) out[*it] = std::min(out[*it], out[y] - t1);
    }
  }
  return out;
}

std::vector<std::int64_t> relax_hop_slice(const Dag& dag,
                                          std::span<const std::int64_t> w,
                                          std::int64_t t2, bool with_loops) {
  const int n = dag.vertex_count();
  std::vector<Vertex> order =
      detail::sort_by_weight(w, static_cast<std::size_t>(dag.edge_count()));
  std::vector<int> mark(n, -1);
  std::vector<std::int64_t> out(n, kInf);
  for (Vertex v = 0; v < n; ++v) {
    mark[v] = v;
    for (Vertex u : dag.out(v)) mark[u] = v;
    for (Vertex u : dag.in(v)) mark[u] = v;
    std::int64_t best = with_loops ? w[v] : kInf;
    for (Vertex x : order) {
      if (mark[x] == v) continue;
      if (w[x] < kInf) best = std::min(best, w[x] + t2);
      break;
    }
    out[v] = best;
  }
  return out;
}

std::vector<Violation> verify_assignment(const Dag& dag, Thresholds th,
                                         std::span<const std::int64_t> alpha) {
  if (static_cast<int>(alpha.size()) < dag.vertex_count()) {
    throw Error(ErrorCode::kMissingVertex,
                "assignment covers " + std::to_string(alpha.size()) + " of " +
                    std::to_string(dag.vertex_count()) + " vertices",
                {static_cast<long long>(alpha.size())});
  }
  std::vector<Violation> bad;
  for (Vertex u = 0; u < dag.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < dag.vertex_count(); ++v) {
      if (dag.has_edge(u, v)) {
        if (alpha[v] - alpha[u] < th.t1) {
          bad.push_back({Violation::Kind::kEdgeTooShort, u, v, alpha[v] - alpha[u]});
        }
      } else if (dag.has_edge(v, u)) {
        if (alpha[u] - alpha[v] < th.t1) {
          bad.push_back({Violation::Kind::kEdgeTooShort, v, u, alpha[u] - alpha[v]});
        }
      } else {
        std::int64_t d = alpha[v] - alpha[u];
        if (d > th.t2 || -d > th.t2) {
          bad.push_back({Violation::Kind::kHopTooLong, u, v, d});
        }
      }
    }
  }
  return bad;
}

Rational verify_forcing_cycle(const Dag& dag, const ForcingCycle& cycle) {
  const auto& steps = cycle.steps;
  if (steps.size() < 2) {
    throw Error(ErrorCode::kNotSimple, "a forcing cycle needs two vertices");
  }
  std::set<Vertex> seen;
  for (const ForcingStep& s : steps) {
    if (s.vertex < 0 || s.vertex >= dag.vertex_count()) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "cycle vertex " + std::to_string(s.vertex) + " out of range");
    }
    if (!seen.insert(s.vertex).second) {
      throw Error(ErrorCode::kNotSimple,
                  "vertex " + std::to_string(s.vertex) + " repeats",
                  {s.vertex});
    }
  }
  for (std::size_t k = 0; k < steps.size(); ++k) {
    Vertex a = steps[k].vertex;
    Vertex b = steps[(k + 1) % steps.size()].vertex;
    bool ok = steps[k].kind == StepKind::kEdge ? dag.has_edge(a, b)
                                               : !dag.adjacent(a, b);
    if (!ok) {
      throw Error(ErrorCode::kWrongStepKind,
                  "step " + std::to_string(k) + " (" + std::to_string(a) +
                      "," + std::to_string(b) + ") is not a " +
                      (steps[k].kind == StepKind::kEdge ? "dag edge" : "hop"),
                  {static_cast<long long>(k)});
    }
  }
  return cycle.ratio();
}

}  // namespace dtg
