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

#ifndef DTG_APPROX_HPP_
#define DTG_APPROX_HPP_

#include <optional>
#include <vector>

#include "dtg/dag.hpp"
#include "dtg/feasibility.hpp"
#include "dtg/rational.hpp"

namespace dtg {

// A dag together with a satisfying assignment at ratio lambda, or the level
// structure of a weak order. Built once and shared by the approximations.
struct UtilityModel {
  Rational lambda;
  Thresholds thresholds;          // (den, num) of lambda; unused for weak orders
  UtilityAssignment assignment;   // empty for weak orders
  std::optional<std::vector<int>> levels;  // set exactly for weak orders

  bool degenerate() const { return levels.has_value(); }
  // floor(lambda) + 1.
  int factor() const { return static_cast<int>(lambda.floor()) + 1; }
};

UtilityModel build_utility_model(const Dag& dag);

struct ApproxResult {
  // Independent set: one set. Coloring: color classes. Cover: cliques.
  // Every set is sorted by vertex id.
  std::vector<std::vector<Vertex>> sets;
  int k = 1;          // approximation factor floor(lambda) + 1
  Rational lambda;
  Thresholds thresholds;
  UtilityAssignment assignment;
  bool exact = false; // weak orders are solved optimally
};

// Vertices whose utilities fall in the fullest window [x, x + t1). Within a
// factor k of a maximum independent set.
ApproxResult independent_set_approx(const Dag& dag);
ApproxResult independent_set_approx(const Dag& dag, const UtilityModel& model);

// Buckets [x + i t1, x + (i + 1) t1) from the smallest utility x; nonempty
// buckets are the classes. At most k times the chromatic number.
ApproxResult coloring_approx(const Dag& dag);
ApproxResult coloring_approx(const Dag& dag, const UtilityModel& model);

// Repeatedly takes the fullest window [y, y + t2], grows a chain from its
// lowest vertex with gaps above t2 in both directions, emits it and removes
// it. At most k times the minimum clique cover.
ApproxResult clique_cover_approx(const Dag& dag);
ApproxResult clique_cover_approx(const Dag& dag, const UtilityModel& model);

}  // namespace dtg

#endif  // DTG_APPROX_HPP_
