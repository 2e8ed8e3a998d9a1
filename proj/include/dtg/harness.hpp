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


#ifndef DTG_HARNESS_HPP_
#define DTG_HARNESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtg/dag.hpp"
#include "dtg/feasibility.hpp"

namespace dtg::harness {

// Cross-checks against the brute-force oracles. Each returns an empty string
// on success and a short description of the first discrepancy otherwise.
// Oracle-backed checks skip parts whose oracle would be too slow for n.
std::string check_lambda_oracles(const Dag& dag);
std::string check_feasibility(const Dag& dag, Thresholds th);
std::string check_certificate(const Dag& dag);
std::string check_extendability(const Dag& dag);
std::string check_clique(const Dag& dag);
std::string check_approximations(const Dag& dag);
std::string check_transitivity(const Dag& dag);
std::string check_round_trip(const Dag& dag);
std::string check_pass_bounds(const Dag& dag);

// Pass-count bounds: floor((n-1)/(r+1)) + 2 for the feasibility table at
// ratio r, floor(n/(lambda+1)) + 2 for the minimum cycle mean table.
std::int64_t feasibility_pass_bound(int n, Thresholds th);
std::int64_t lambda_pass_bound(int n, const Rational& lambda);

// All dags on up to min(max_n, 4) vertices, then `random_count` seeded
// random dags with 5..max_n vertices (none when max_n < 5).
std::vector<Dag> corpus(int max_n, int random_count, std::uint64_t seed);

nlohmann::json run_selftest(int max_n, int random_count, std::uint64_t seed);

// One instance per size from oracle::generate(family, n, p, seed + index).
nlohmann::json run_bench(const std::string& family, const std::vector<int>& sizes,
                         double p, std::uint64_t seed);

}  // namespace dtg::harness

#endif  // DTG_HARNESS_HPP_
