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

#include "dtg/approx.hpp"

#include <algorithm>

#include "dtg/lambda.hpp"

namespace dtg {
namespace {

ApproxResult skeleton(const UtilityModel& model) {
  ApproxResult r;
  r.k = model.factor();
  r.lambda = model.lambda;
  r.thresholds = model.thresholds;
  r.assignment = model.assignment;
  r.exact = model.degenerate();
  return r;
}

std::vector<std::vector<Vertex>> level_sets(const std::vector<int>& levels) {
  int depth = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end()) + 1;
  std::vector<std::vector<Vertex>> sets(depth);
  for (Vertex v = 0; v < static_cast<Vertex>(levels.size()); ++v) {
    sets[levels[v]].push_back(v);
  }
  return sets;
}

// Vertices sorted by (alpha, id).
std::vector<Vertex> by_utility(const std::vector<std::int64_t>& alpha,
                               std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end(), [&](Vertex a, Vertex b) {
    return alpha[a] != alpha[b] ? alpha[a] < alpha[b] : a < b;
  });
  return vertices;
}

// Index range [first, last) in `sorted` of the fullest window [x, x + width)
// (closed on the right when `closed`), x ranging over the utilities; ties go
// to the smallest x.
std::pair<std::size_t, std::size_t> fullest_window(
    const std::vector<Vertex>& sorted, const std::vector<std::int64_t>& alpha,
    std::int64_t width, bool closed) {
  std::pair<std::size_t, std::size_t> best{0, 0};
  std::size_t hi = 0;
  for (std::size_t lo = 0; lo < sorted.size(); ++lo) {
    if (lo > 0 && alpha[sorted[lo]] == alpha[sorted[lo - 1]]) continue;
    std::int64_t x = alpha[sorted[lo]];
    hi = std::max(hi, lo);
    while (hi < sorted.size() &&
           (closed ? alpha[sorted[hi]] - x <= width : alpha[sorted[hi]] - x < width)) {
      ++hi;
    }
    if (hi - lo > best.second - best.first) best = {lo, hi};
  }
  return best;
}

}  // namespace

UtilityModel build_utility_model(const Dag& dag) {
  UtilityModel model;
  DegeneracyClass cls = classify_degenerate(dag);
  if (cls.degenerate()) {
    model.lambda = Rational(0);
    model.levels = std::move(cls.levels);
    return model;
  }
  LambdaCertificate cert = certify_lambda(dag);
  model.lambda = cert.lambda;
  model.thresholds = cert.thresholds;
  model.assignment = std::move(cert.assignment);
  return model;
}

ApproxResult independent_set_approx(const Dag& dag) {
  return independent_set_approx(dag, build_utility_model(dag));
}

ApproxResult independent_set_approx(const Dag& dag, const UtilityModel& model) {
  ApproxResult r = skeleton(model);
  if (dag.vertex_count() == 0) return r;
  if (model.degenerate()) {
    auto levels = level_sets(*model.levels);
    auto largest = std::max_element(
        levels.begin(), levels.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    r.sets = {*largest};
    return r;
  }
  const auto& alpha = model.assignment.alpha;
  std::vector<Vertex> all(dag.vertex_count());
  for (Vertex v = 0; v < dag.vertex_count(); ++v) all[v] = v;
  std::vector<Vertex> sorted = by_utility(alpha, all);
  auto [lo, hi] = fullest_window(sorted, alpha, model.thresholds.t1, false);
  std::vector<Vertex> chosen(sorted.begin() + static_cast<std::ptrdiff_t>(lo),
                             sorted.begin() + static_cast<std::ptrdiff_t>(hi));
  std::sort(chosen.begin(), chosen.end());
  r.sets = {chosen};
  return r;
}

ApproxResult coloring_approx(const Dag& dag) {
  return coloring_approx(dag, build_utility_model(dag));
}

ApproxResult coloring_approx(const Dag& dag, const UtilityModel& model) {
  ApproxResult r = skeleton(model);
  if (dag.vertex_count() == 0) return r;
  if (model.degenerate()) {
    r.sets = level_sets(*model.levels);
    return r;
  }
  const auto& alpha = model.assignment.alpha;
  std::int64_t lowest = *std::min_element(alpha.begin(), alpha.end());
  std::int64_t highest = *std::max_element(alpha.begin(), alpha.end());
  std::int64_t t1 = model.thresholds.t1;
  std::vector<std::vector<Vertex>> buckets((highest - lowest) / t1 + 1);
  for (Vertex v = 0; v < dag.vertex_count(); ++v) {
    buckets[(alpha[v] - lowest) / t1].push_back(v);
  }
  for (auto& b : buckets) {
    if (!b.empty()) r.sets.push_back(std::move(b));
  }
  return r;
}

ApproxResult clique_cover_approx(const Dag& dag) {
  return clique_cover_approx(dag, build_utility_model(dag));
}

ApproxResult clique_cover_approx(const Dag& dag, const UtilityModel& model) {
  ApproxResult r = skeleton(model);
  if (model.degenerate()) {
    // One vertex from every nonempty level per clique.
    auto levels = level_sets(*model.levels);
    std::vector<std::size_t> next(levels.size(), 0);
    for (bool more = !levels.empty(); more;) {
      std::vector<Vertex> clique;
      more = false;
      for (std::size_t l = 0; l < levels.size(); ++l) {
        if (next[l] < levels[l].size()) clique.push_back(levels[l][next[l]++]);
        more = more || next[l] < levels[l].size();
      }
      if (!clique.empty()) {
        std::sort(clique.begin(), clique.end());
        r.sets.push_back(std::move(clique));
      }
    }
    return r;
  }
  const auto& alpha = model.assignment.alpha;
  const std::int64_t t2 = model.thresholds.t2;
  std::vector<Vertex> remaining(dag.vertex_count());
  for (Vertex v = 0; v < dag.vertex_count(); ++v) remaining[v] = v;
  remaining = by_utility(alpha, remaining);
  while (!remaining.empty()) {
    auto window = fullest_window(remaining, alpha, t2, true);
    std::size_t start = window.first;
    // Chains with consecutive gaps above t2; within `remaining` (sorted by
    // utility, then id) the first qualifying entry is the minimum-utility,
    // lowest-id choice.
    std::vector<std::size_t> picked{start};
    for (std::size_t cur = start, i = start + 1; i < remaining.size(); ++i) {
      if (alpha[remaining[i]] > alpha[remaining[cur]] + t2) {
        picked.push_back(i);
        cur = i;
      }
    }
    for (std::size_t cur = start; cur > 0;) {
      // Largest utility below alpha(cur) - t2, lowest id among equals.
      std::size_t i = cur;
      while (i > 0 && alpha[remaining[i - 1]] >= alpha[remaining[cur]] - t2) --i;
      if (i == 0) break;
      std::size_t j = i - 1;
      while (j > 0 && alpha[remaining[j - 1]] == alpha[remaining[i - 1]]) --j;
      picked.push_back(j);
      cur = j;
    }
    std::sort(picked.begin(), picked.end());
    std::vector<Vertex> clique;
    for (std::size_t idx : picked) clique.push_back(remaining[idx]);
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    std::sort(clique.begin(), clique.end());
    r.sets.push_back(std::move(clique));
  }
  return r;
}

}  // namespace dtg
