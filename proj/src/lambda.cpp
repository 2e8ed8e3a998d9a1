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

#include "dtg/lambda.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "dtg/error.hpp"
#include "layered_table.hpp"

namespace dtg {

using detail::kInf;

MinCycleMean min_cycle_mean(const Dag& dag, Thresholds th) {
  if (th.t1 <= 0 || th.t2 < 0) {
    throw Error(ErrorCode::kInvalidThresholds,
                "minimum cycle mean needs t1 > 0 and t2 >= 0");
  }
  if (classify_degenerate(dag).degenerate()) {
    throw Error(ErrorCode::kDegenerateInput,
                "weak orders have no defining forcing cycle");
  }
  const std::int64_t n = dag.vertex_count();
  detail::LayeredTable table(dag, th, /*with_loops=*/false);
  MinCycleMean result;
  MinCycleMeanStats& stats = result.stats;
  std::optional<Rational> best;

  // Walk length per cell, -1 where no walk exists.
  std::vector<std::vector<std::int64_t>> length;
  auto push_lengths = [&](std::int64_t i) {
    auto h = table.row(static_cast<int>(i));
    std::vector<std::int64_t> row(h.size(), -1);
    for (std::size_t v = 0; v < h.size(); ++v) {
      if (h[v] >= kInf) continue;
      std::int64_t minus = i * th.t2 - h[v];
      if (minus % th.t1 != 0) internal_error("walk weight not a lattice point");
      row[v] = i + minus / th.t1;
    }
    length.push_back(std::move(row));
  };
  push_lengths(0);

  for (std::int64_t i = 1;; ++i) {
    if (best && *best < Rational(i * th.t2 - (n - i) * th.t1, n)) break;
    if (i > n + 1) {
      if (!best) internal_error("no term of interest for a nondegenerate dag");
      break;
    }
    table.advance();
    ++stats.passes;
    push_lengths(i);
    auto hi = table.row(static_cast<int>(i));
    for (Vertex v = 0; v < n; ++v) {
      if (length[i][v] != n) continue;
      ++stats.terms_of_interest;
      std::optional<Rational> inner;
      for (std::int64_t j = 0; j < i; ++j) {
        ++stats.inner_reads;
        std::int64_t lj = length[j][v];
        if (lj < 0 || lj >= n) continue;
        Rational k(hi[v] - table.row(static_cast<int>(j))[v], n - lj);
        if (!inner || *inner < k) inner = k;
      }
      if (inner && (!best || *inner < *best)) best = inner;
    }
  }
  stats.table_cells = table.cells();
  result.mean = *best;
  return result;
}

LambdaResult compute_lambda(const Dag& dag) {
  LambdaResult result;
  if (classify_degenerate(dag).degenerate()) {
    result.lambda = Rational(0);
    return result;
  }
  MinCycleMean mcm = min_cycle_mean(dag, Thresholds{1, 1});
  const Rational one(1);
  Rational ratio = (one - mcm.mean) / (one + mcm.mean);
  result.max_forcing_ratio = ratio;
  result.lambda = std::max(ratio, one);
  result.stats = mcm.stats;
  return result;
}

LambdaCertificate certify_lambda(const Dag& dag) {
  LambdaResult lr = compute_lambda(dag);
  if (!lr.max_forcing_ratio) {
    throw Error(ErrorCode::kDegenerateInput,
                "weak orders have lambda 0 and no forcing-cycle certificate");
  }
  LambdaCertificate cert;
  cert.lambda = lr.lambda;
  cert.max_forcing_ratio = *lr.max_forcing_ratio;
  cert.lambda_stats = lr.stats;
  cert.thresholds = Thresholds{lr.lambda.den(), lr.lambda.num()};

  FeasibilityResult at_lambda = check_feasible(dag, cert.thresholds);
  if (!at_lambda.feasible()) {
    internal_error("lambda " + lr.lambda.to_string() + " is not satisfiable");
  }
  cert.assignment = at_lambda.assignment();
  cert.assignment_stats = at_lambda.stats();

  // Any forcing ratio above (a n - 1) / (b n) with at most n vertices on the
  // cycle is at least a/b, so the certificate cycle has ratio exactly a/b.
  const std::int64_t n = dag.vertex_count();
  const Rational& rho = cert.max_forcing_ratio;
  FeasibilityResult below = solve_difference_constraints(
      dag, Thresholds{rho.den() * n, rho.num() * n - 1});
  if (below.feasible()) {
    internal_error("no forcing cycle just below ratio " + rho.to_string());
  }
  cert.cycle = below.cycle();
  cert.cycle_stats = below.stats();
  if (cert.cycle.ratio() != rho) {
    internal_error("certificate cycle ratio " +
                   cert.cycle.ratio().to_string() + " differs from " +
                   rho.to_string());
  }
  return cert;
}

}  // namespace dtg
