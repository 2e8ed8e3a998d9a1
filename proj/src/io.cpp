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

#include "dtg/io.hpp"

#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "dtg/error.hpp"

namespace dtg::io {
namespace {

using nlohmann::json;

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::string_view t = trim(raw);
    if (!t.empty() && t.front() != '#') lines.push_back({number, t});
    if (text.empty()) break;
  }
  return lines;
}

[[noreturn]] void fail(ErrorCode code, int line, const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ": " + what, {line});
}

// Exactly two whitespace-separated integers.
std::pair<std::int64_t, std::int64_t> two_ints(const Line& line) {
  std::istringstream in{std::string(line.text)};
  std::string a, b, extra;
  in >> a >> b;
  if (a.empty() || b.empty() || (in >> extra)) {
    fail(ErrorCode::kParseError, line.number,
         "expected two integers, got '" + std::string(line.text) + "'");
  }
  auto parse = [&](const std::string& tok) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(ErrorCode::kParseError, line.number, "not an integer: '" + tok + "'");
    }
    return v;
  };
  return {parse(a), parse(b)};
}

json rational_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

Rational rational_from(const json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

std::vector<std::vector<Vertex>> map_sets(const std::vector<std::vector<Vertex>>& sets) {
  return sets;
}

bool is_partition(const Dag& dag, const std::vector<std::vector<Vertex>>& sets) {
  std::vector<int> hits(dag.vertex_count(), 0);
  for (const auto& s : sets) {
    for (Vertex v : s) {
      if (v < 0 || v >= dag.vertex_count()) return false;
      ++hits[v];
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

ResultDocument base_document(const std::string& command, const Dag& dag) {
  ResultDocument doc;
  doc.command = command;
  doc.n = dag.vertex_count();
  doc.m = dag.edge_count();
  return doc;
}

json lambda_stats_json(const MinCycleMeanStats& s) {
  return {{"passes", s.passes},
          {"table_cells", s.table_cells},
          {"terms_of_interest", s.terms_of_interest},
          {"inner_reads", s.inner_reads}};
}

json feasibility_stats_json(const FeasibilityStats& s) {
  return {{"passes", s.passes},
          {"stopping_index", s.stopping_index},
          {"table_cells", s.table_cells}};
}

}  // namespace

std::string emit_instance(const Dag& dag) {
  std::string out = std::to_string(dag.vertex_count()) + " " +
                    std::to_string(dag.edge_count()) + "\n";
  for (const Edge& e : dag.edges()) {
    out += std::to_string(e.from) + " " + std::to_string(e.to) + "\n";
  }
  if (dag.has_labels()) {
    out += "labels\n";
    for (const auto& label : dag.labels()) out += label + "\n";
  }
  return out;
}

Dag parse_instance(std::string_view text) {
  std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "empty instance", {1});
  auto [n, m] = two_ints(lines[0]);
  if (n < 0 || m < 0 || n > (1 << 24)) {
    fail(ErrorCode::kParseError, lines[0].number, "bad header counts");
  }
  if (static_cast<std::int64_t>(lines.size()) < 1 + m) {
    int last = lines.back().number;
    fail(ErrorCode::kParseError, last,
         "expected " + std::to_string(m) + " edge lines, found " +
             std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::int64_t i = 1; i <= m; ++i) {
    const Line& line = lines[i];
    auto [u, v] = two_ints(line);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail(ErrorCode::kVertexOutOfRange, line.number,
           "vertex outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      fail(ErrorCode::kSelfLoop, line.number, "self-loop at vertex " + std::to_string(u));
    }
    if (!seen.insert({u, v}).second) {
      fail(ErrorCode::kDuplicateEdge, line.number,
           "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::vector<std::string> labels;
  std::size_t rest = static_cast<std::size_t>(m) + 1;
  if (rest < lines.size()) {
    if (lines[rest].text != "labels") {
      fail(ErrorCode::kParseError, lines[rest].number,
           "unexpected content after edge list");
    }
    if (lines.size() - rest - 1 != static_cast<std::size_t>(n)) {
      fail(ErrorCode::kParseError, lines[rest].number,
           "labels section needs exactly " + std::to_string(n) + " lines");
    }
    for (std::size_t i = rest + 1; i < lines.size(); ++i) {
      labels.emplace_back(lines[i].text);
    }
  }
  return Dag::build(static_cast<int>(n), edges, std::move(labels));
}

Thresholds parse_thresholds(std::string_view t1, std::string_view t2) {
  Rational a = Rational::parse(t1);
  Rational b = Rational::parse(t2);
  std::int64_t scale = std::lcm(a.den(), b.den());
  Thresholds th{(a * Rational(scale)).num(), (b * Rational(scale)).num()};
  th.validate();
  return th;
}

json to_json(const ResultDocument& doc) {
  json j;
  j["command"] = doc.command;
  j["n"] = doc.n;
  j["m"] = doc.m;
  if (doc.lambda) j["lambda"] = rational_json(*doc.lambda);
  if (doc.max_forcing_ratio) j["max_forcing_ratio"] = rational_json(*doc.max_forcing_ratio);
  if (doc.feasible) j["feasible"] = *doc.feasible;
  if (doc.thresholds) j["thresholds"] = {{"t1", doc.thresholds->t1}, {"t2", doc.thresholds->t2}};
  if (doc.assignment) {
    j["assignment"] = {{"t1", doc.assignment->t1},
                       {"t2", doc.assignment->t2},
                       {"alpha", doc.assignment->alpha}};
  }
  if (doc.cycle) {
    json steps = json::array();
    for (const ForcingStep& s : doc.cycle->steps) {
      steps.push_back({{"vertex", s.vertex},
                       {"step", s.kind == StepKind::kEdge ? "edge" : "hop"}});
    }
    j["cycle"] = {{"edges", doc.cycle->edge_count()},
                  {"hops", doc.cycle->hop_count()},
                  {"steps", steps}};
    if (doc.cycle->hop_count() > 0) j["cycle"]["ratio"] = rational_json(doc.cycle->ratio());
  }
  if (doc.solution) {
    j["solution"] = {{"kind", doc.solution->kind},
                     {"sets", doc.solution->sets},
                     {"k", doc.solution->k},
                     {"exact", doc.solution->exact}};
  }
  if (!doc.report.is_null()) j["report"] = doc.report;
  if (!doc.instrumentation.is_null()) j["instrumentation"] = doc.instrumentation;
  return j;
}

ResultDocument from_json(const json& j) {
  ResultDocument doc;
  doc.command = j.at("command").get<std::string>();
  doc.n = j.at("n").get<int>();
  doc.m = j.at("m").get<std::int64_t>();
  if (j.contains("lambda")) doc.lambda = rational_from(j["lambda"]);
  if (j.contains("max_forcing_ratio")) doc.max_forcing_ratio = rational_from(j["max_forcing_ratio"]);
  if (j.contains("feasible")) doc.feasible = j["feasible"].get<bool>();
  if (j.contains("thresholds")) {
    doc.thresholds = Thresholds{j["thresholds"].at("t1").get<std::int64_t>(),
                                j["thresholds"].at("t2").get<std::int64_t>()};
  }
  if (j.contains("assignment")) {
    const json& a = j["assignment"];
    doc.assignment = AssignmentDoc{a.at("t1").get<std::int64_t>(),
                                   a.at("t2").get<std::int64_t>(),
                                   a.at("alpha").get<std::vector<std::int64_t>>()};
  }
  if (j.contains("cycle")) {
    ForcingCycle cycle;
    for (const json& s : j["cycle"].at("steps")) {
      std::string kind = s.at("step").get<std::string>();
      if (kind != "edge" && kind != "hop") {
        throw Error(ErrorCode::kParseError, "unknown cycle step '" + kind + "'");
      }
      cycle.steps.push_back({s.at("vertex").get<Vertex>(),
                             kind == "edge" ? StepKind::kEdge : StepKind::kHop});
    }
    doc.cycle = std::move(cycle);
  }
  if (j.contains("solution")) {
    const json& s = j["solution"];
    doc.solution = SolutionDoc{s.at("kind").get<std::string>(),
                               s.at("sets").get<std::vector<std::vector<Vertex>>>(),
                               s.at("k").get<int>(), s.at("exact").get<bool>()};
  }
  if (j.contains("report")) doc.report = j["report"];
  if (j.contains("instrumentation")) doc.instrumentation = j["instrumentation"];
  return doc;
}

std::string emit_document(const ResultDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

ResultDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
    return from_json(j);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("result document: ") + e.what());
  }
}

std::vector<std::string> verify_document(const Dag& dag, const ResultDocument& doc) {
  std::vector<std::string> problems;
  if (doc.n != dag.vertex_count() || doc.m != dag.edge_count()) {
    problems.push_back("document does not describe this instance");
    return problems;
  }
  if (doc.assignment) {
    Thresholds th{doc.assignment->t1, doc.assignment->t2};
    try {
      th.validate();
      auto bad = verify_assignment(dag, th, doc.assignment->alpha);
      if (!bad.empty()) {
        problems.push_back("assignment violates " + std::to_string(bad.size()) + " constraint(s)");
      }
    } catch (const Error& e) {
      problems.push_back(std::string("assignment: ") + e.what());
    }
    if (doc.lambda && !(th.ratio() == *doc.lambda)) {
      problems.push_back("assignment ratio " + th.ratio().to_string() +
                         " differs from lambda " + doc.lambda->to_string());
    }
  }
  if (doc.cycle) {
    try {
      Rational r = verify_forcing_cycle(dag, *doc.cycle);
      if (doc.thresholds && !(r > doc.thresholds->ratio())) {
        problems.push_back("cycle ratio " + r.to_string() + " does not exceed t2/t1");
      }
      if (doc.max_forcing_ratio && r != *doc.max_forcing_ratio) {
        problems.push_back("cycle ratio " + r.to_string() +
                           " differs from the stated maximum forcing ratio");
      }
    } catch (const Error& e) {
      problems.push_back(std::string("cycle: ") + e.what());
    }
  }
  if (doc.solution) {
    const auto& sets = doc.solution->sets;
    const std::string& kind = doc.solution->kind;
    for (const auto& s : sets) {
      for (Vertex v : s) {
        if (v < 0 || v >= dag.vertex_count()) {
          problems.push_back("solution vertex out of range");
          return problems;
        }
      }
    }
    auto all = [&](auto pred) { return std::all_of(sets.begin(), sets.end(), pred); };
    auto clique = [&](const std::vector<Vertex>& s) { return is_clique(dag, s); };
    auto indep = [&](const std::vector<Vertex>& s) { return is_independent(dag, s); };
    if (kind == "clique") {
      if (sets.size() != 1 || !clique(sets[0])) problems.push_back("solution is not a clique");
    } else if (kind == "independent_set") {
      if (sets.size() != 1 || !indep(sets[0])) problems.push_back("solution is not independent");
    } else if (kind == "coloring") {
      if (!is_partition(dag, sets) || !all(indep)) problems.push_back("coloring is not proper");
    } else if (kind == "clique_cover") {
      if (!is_partition(dag, sets) || !all(clique)) problems.push_back("cover is not a clique partition");
    } else {
      problems.push_back("unknown solution kind '" + kind + "'");
    }
  }
  return problems;
}

ResultDocument lambda_document(const Dag& dag, const LambdaResult& r) {
  ResultDocument doc = base_document("lambda", dag);
  doc.lambda = r.lambda;
  doc.max_forcing_ratio = r.max_forcing_ratio;
  doc.instrumentation = lambda_stats_json(r.stats);
  return doc;
}

ResultDocument check_document(const Dag& dag, Thresholds th, const FeasibilityResult& r) {
  ResultDocument doc = base_document("check", dag);
  doc.feasible = r.feasible();
  doc.thresholds = th;
  if (r.feasible()) {
    doc.assignment = AssignmentDoc{th.t1, th.t2, r.assignment().alpha};
  } else {
    doc.cycle = r.cycle();
  }
  doc.instrumentation = feasibility_stats_json(r.stats());
  return doc;
}

ResultDocument certify_document(const Dag& dag, const LambdaCertificate& c) {
  ResultDocument doc = base_document("certify", dag);
  doc.lambda = c.lambda;
  doc.max_forcing_ratio = c.max_forcing_ratio;
  doc.assignment = AssignmentDoc{c.thresholds.t1, c.thresholds.t2, c.assignment.alpha};
  doc.cycle = c.cycle;
  doc.instrumentation = {{"lambda", lambda_stats_json(c.lambda_stats)},
                         {"assignment", feasibility_stats_json(c.assignment_stats)},
                         {"cycle", feasibility_stats_json(c.cycle_stats)}};
  return doc;
}

ResultDocument clique_document(const Dag& dag, const CliqueSolution& s, int factor,
                               bool strict) {
  ResultDocument doc = base_document("clique", dag);
  doc.solution = SolutionDoc{"clique", {s.vertices}, s.k, factor <= 1};
  doc.instrumentation = {{"approx_factor", factor}, {"strict", strict}};
  return doc;
}

ResultDocument approx_document(const Dag& dag, const std::string& kind,
                               const ApproxResult& r) {
  ResultDocument doc = base_document(kind == "independent_set" ? "mis"
                                     : kind == "coloring"      ? "color"
                                                               : "cover",
                                     dag);
  doc.lambda = r.lambda;
  doc.solution = SolutionDoc{kind, map_sets(r.sets), r.k, r.exact};
  if (!r.exact) {
    doc.assignment = AssignmentDoc{r.thresholds.t1, r.thresholds.t2, r.assignment.alpha};
  }
  return doc;
}

}  // namespace dtg::io
