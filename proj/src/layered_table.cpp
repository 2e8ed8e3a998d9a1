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

#include "layered_table.hpp"

#include <algorithm>
#include <unordered_map>

#include "dtg/error.hpp"

namespace dtg::detail {

std::vector<Vertex> sort_by_weight(std::span<const std::int64_t> w,
                                   std::size_t extra) {
  const std::size_t n = w.size();
  std::vector<Vertex> order;
  order.reserve(n);
  std::int64_t lo = kInf;
  std::int64_t hi = -kInf;
  std::size_t finite = 0;
  for (std::int64_t x : w) {
    if (x >= kInf) continue;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    ++finite;
  }
  if (finite > 0) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range <= 2 * (n + extra) + 64) {
      std::vector<std::uint32_t> start(range + 1, 0);
      for (std::int64_t x : w) {
        if (x < kInf) ++start[x - lo + 1];
      }
      for (std::size_t k = 1; k <= range; ++k) start[k] += start[k - 1];
      order.resize(finite);
      for (std::size_t v = 0; v < n; ++v) {
        if (w[v] < kInf) order[start[w[v] - lo]++] = static_cast<Vertex>(v);
      }
    } else {
      for (std::size_t v = 0; v < n; ++v) {
        if (w[v] < kInf) order.push_back(static_cast<Vertex>(v));
      }
      std::stable_sort(order.begin(), order.end(),
                       [&](Vertex a, Vertex b) { return w[a] < w[b]; });
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (w[v] >= kInf) order.push_back(static_cast<Vertex>(v));
  }
  return order;
}

LayeredTable::LayeredTable(const Dag& dag, Thresholds th, bool with_loops)
    : dag_(dag), th_(th), with_loops_(with_loops) {
  reverse_topo_ = topological_sort(dag);
  std::reverse(reverse_topo_.begin(), reverse_topo_.end());
  mark_.assign(dag.vertex_count(), 0);
  std::vector<std::int64_t> value(dag.vertex_count(), 0);
  std::vector<Back> back(dag.vertex_count(), Back{-1, Link::kOrigin});
  relax_dag(value, back);
  values_.push_back(std::move(value));
  backs_.push_back(std::move(back));
}

void LayeredTable::relax_dag(std::vector<std::int64_t>& value,
                             std::vector<Back>& back) const {
  for (Vertex x : reverse_topo_) {
    for (Vertex y : dag_.out(x)) {
      if (value[y] >= kInf) continue;
      std::int64_t cand = value[y] - th_.t1;
      if (cand < value[x]) {
        value[x] = cand;
        back[x] = {y, Link::kEdge};
      }
    }
  }
}

void LayeredTable::advance() {
  const int n = dag_.vertex_count();
  const std::vector<std::int64_t>& prev = values_.back();
  std::vector<Vertex> order =
      sort_by_weight(prev, static_cast<std::size_t>(dag_.edge_count()));
  std::vector<std::int64_t> value(n, kInf);
  std::vector<Back> back(n, Back{-1, Link::kOrigin});
  for (Vertex v = 0; v < n; ++v) {
    if (stamp_ == std::numeric_limits<std::uint32_t>::max()) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 0;
    }
    ++stamp_;
    mark_[v] = stamp_;
    for (Vertex u : dag_.out(v)) mark_[u] = stamp_;
    for (Vertex u : dag_.in(v)) mark_[u] = stamp_;
    // The first unmarked vertex in weight order is the cheapest hop partner.
    std::int64_t cand = kInf;
    Vertex partner = -1;
    for (Vertex x : order) {
      if (mark_[x] == stamp_) continue;
      if (prev[x] < kInf) {
        cand = prev[x] + th_.t2;
        partner = x;
      }
      break;
    }
    if (with_loops_ && prev[v] <= cand) {
      value[v] = prev[v];
      back[v] = {v, Link::kStay};
    } else if (partner != -1) {
      value[v] = cand;
      back[v] = {partner, Link::kHop};
    }
  }
  relax_dag(value, back);
  values_.push_back(std::move(value));
  backs_.push_back(std::move(back));
}

std::vector<GdStep> LayeredTable::walk_to(int i, Vertex v) const {
  std::vector<GdStep> steps;
  int row = i;
  Vertex cur = v;
  while (true) {
    const Back& b = backs_[row][cur];
    if (b.link == Link::kOrigin) break;
    if (b.link == Link::kStay) {
      --row;
    } else if (b.link == Link::kHop) {
      steps.push_back({b.pred, cur, StepKind::kHop});
      cur = b.pred;
      --row;
    } else {
      steps.push_back({b.pred, cur, StepKind::kEdge});
      cur = b.pred;
    }
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::vector<std::vector<GdStep>> split_cycles(std::span<const GdStep> walk) {
  std::vector<std::vector<GdStep>> cycles;
  if (walk.empty()) return cycles;
  std::vector<Vertex> verts{walk.front().from};
  std::vector<GdStep> open;
  std::unordered_map<Vertex, std::size_t> pos{{walk.front().from, 0}};
  for (const GdStep& step : walk) {
    if (step.from != verts.back()) internal_error("walk is not contiguous");
    open.push_back(step);
    auto it = pos.find(step.to);
    if (it == pos.end()) {
      pos[step.to] = verts.size();
      verts.push_back(step.to);
      continue;
    }
    std::size_t p = it->second;
    cycles.emplace_back(open.begin() + static_cast<std::ptrdiff_t>(p),
                        open.end());
    for (std::size_t k = p + 1; k < verts.size(); ++k) pos.erase(verts[k]);
    verts.resize(p + 1);
    open.resize(p);
  }
  return cycles;
}

ForcingCycle to_forcing_cycle(std::span<const GdStep> gd_cycle) {
  ForcingCycle cycle;
  for (auto it = gd_cycle.rbegin(); it != gd_cycle.rend(); ++it) {
    cycle.steps.push_back({it->to, it->kind});
  }
  auto first = std::min_element(
      cycle.steps.begin(), cycle.steps.end(),
      [](const ForcingStep& a, const ForcingStep& b) {
        return a.vertex < b.vertex;
      });
  std::rotate(cycle.steps.begin(), first, cycle.steps.end());
  return cycle;
}

}  // namespace dtg::detail
