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

#ifndef DTG_LAMBDA_HPP_
#define DTG_LAMBDA_HPP_

#include <cstdint>
#include <optional>

#include "dtg/dag.hpp"
#include "dtg/feasibility.hpp"
#include "dtg/rational.hpp"

namespace dtg {

struct MinCycleMeanStats {
  int passes = 0;                  // hop-indexed rows computed after row 0
  std::int64_t table_cells = 0;
  std::int64_t terms_of_interest = 0;
  std::int64_t inner_reads = 0;    // earlier-row cells read by inner maxima
};

struct MinCycleMean {
  Rational mean;
  MinCycleMeanStats stats;
};

// Minimum cycle mean of G_d weighted by `th`.
//
// Row i of the table holds H(i, v), the minimum weight of a walk ending at v
// with exactly i hop edges, and l(i, v) = i + (i t2 - H(i, v)) / t1 is that
// walk's length. Terms with l(i, v) = n contribute
//   max over j < i with l(j, v) < n of (H(i,v) - H(j,v)) / (n - l(j,v))
// to a running minimum, and the search stops before the first pass i with
// min < (i t2 - (n - i) t1) / n. Throws Error(kDegenerateInput) for weak
// orders. Thresholds need t1 > 0 and t2 >= 0 only.
MinCycleMean min_cycle_mean(const Dag& dag, Thresholds th);

struct LambdaResult {
  // Minimum satisfiable ratio t2/t1 (0 for weak orders, otherwise >= 1).
  Rational lambda;
  // Largest edges/hops ratio of any forcing cycle; equals lambda unless the
  // t1 <= t2 floor clamps it to 1. Unset for weak orders.
  std::optional<Rational> max_forcing_ratio;
  MinCycleMeanStats stats;

  bool clamped() const {
    return max_forcing_ratio.has_value() && *max_forcing_ratio < lambda;
  }
};

// lambda = (1 - c) / (1 + c), c the minimum cycle mean at (t1, t2) = (1, 1),
// clamped below at 1.
LambdaResult compute_lambda(const Dag& dag);

// A satisfying assignment at (den, num) of lambda plus a forcing cycle whose
// ratio is exactly max_forcing_ratio. Together they pin lambda: the cycle
// shows no smaller ratio works, the assignment that lambda does. When the
// value is clamped to 1 the cycle ratio is below 1 and only the model's
// t1 <= t2 floor bounds lambda from below.
struct LambdaCertificate {
  Rational lambda;
  Rational max_forcing_ratio;
  Thresholds thresholds;  // (lambda.den, lambda.num)
  UtilityAssignment assignment;
  ForcingCycle cycle;
  MinCycleMeanStats lambda_stats;
  FeasibilityStats assignment_stats;
  FeasibilityStats cycle_stats;
};

// Throws Error(kDegenerateInput) for weak orders.
LambdaCertificate certify_lambda(const Dag& dag);

}  // namespace dtg

#endif  // DTG_LAMBDA_HPP_
