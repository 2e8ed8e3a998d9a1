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

#ifndef DTG_IO_HPP_
#define DTG_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dtg/approx.hpp"
#include "dtg/clique.hpp"
#include "dtg/dag.hpp"
#include "dtg/feasibility.hpp"
#include "dtg/lambda.hpp"
#include "dtg/rational.hpp"

namespace dtg::io {

// Instance file:
//
//   n m
//   u v          (m lines, directed edge u -> v, 0-based)
//   labels       (optional section)
//   <label 0>
//   ...
//   <label n-1>
//
// Blank lines and lines starting with '#' are ignored. Parse errors carry the
// 1-based line number in the message and in Error::detail().
std::string emit_instance(const Dag& dag);
Dag parse_instance(std::string_view text);

// Both thresholds given as "p" or "p/q", scaled by the lcm of their
// denominators. Throws Error(kParseError) or Error(kInvalidThresholds).
Thresholds parse_thresholds(std::string_view t1, std::string_view t2);

struct AssignmentDoc {
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
  std::vector<std::int64_t> alpha;
  friend bool operator==(const AssignmentDoc&, const AssignmentDoc&) = default;
};

struct SolutionDoc {
  std::string kind;  // clique, independent_set, coloring, clique_cover
  std::vector<std::vector<Vertex>> sets;
  int k = 0;
  bool exact = false;
  friend bool operator==(const SolutionDoc&, const SolutionDoc&) = default;
};

// One machine-readable document per CLI invocation.
struct ResultDocument {
  std::string command;
  int n = 0;
  std::int64_t m = 0;
  std::optional<Rational> lambda;
  std::optional<Rational> max_forcing_ratio;
  std::optional<bool> feasible;
  std::optional<Thresholds> thresholds;  // the pair a check was run at
  std::optional<AssignmentDoc> assignment;
  std::optional<ForcingCycle> cycle;
  std::optional<SolutionDoc> solution;
  nlohmann::json report;           // bench / selftest payload
  nlohmann::json instrumentation;  // passes, table_cells, elapsed_ms, ...

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

nlohmann::json to_json(const ResultDocument& doc);
ResultDocument from_json(const nlohmann::json& j);
// Two-space indented, newline terminated.
std::string emit_document(const ResultDocument& doc);
ResultDocument parse_document(std::string_view text);

// Re-checks every certificate and solution in `doc` against `dag`. Returns
// human-readable problems; empty means everything verifies.
std::vector<std::string> verify_document(const Dag& dag, const ResultDocument& doc);

// Document builders shared by the C API.
ResultDocument lambda_document(const Dag& dag, const LambdaResult& r);
ResultDocument check_document(const Dag& dag, Thresholds th,
                              const FeasibilityResult& r);
ResultDocument certify_document(const Dag& dag, const LambdaCertificate& c);
ResultDocument clique_document(const Dag& dag, const CliqueSolution& s,
                               int factor, bool strict);
ResultDocument approx_document(const Dag& dag, const std::string& kind,
                               const ApproxResult& r);

}  // namespace dtg::io

#endif  // DTG_IO_HPP_
