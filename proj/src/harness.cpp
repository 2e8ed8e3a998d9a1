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


#include "dtg/harness.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "dtg/approx.hpp"
#include "dtg/clique.hpp"
#include "dtg/error.hpp"
#include "dtg/io.hpp"
#include "dtg/lambda.hpp"
#include "dtg/oracles.hpp"

namespace dtg::harness {
namespace {

using nlohmann::json;

constexpr int kCliqueOracleLimit = 12;
constexpr int kPartitionOracleLimit = 8;
constexpr int kFeasibleOracleLimit = 300;

std::string str(const Rational& r) { return r.to_string(); }

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string round_trip_one(const Dag& dag, const io::ResultDocument& doc) {
  std::string text = io::emit_document(doc);
  io::ResultDocument back = io::parse_document(text);
  if (!(back == doc)) return doc.command + " document changed on round-trip";
  if (io::emit_document(back) != text) return doc.command + " document not byte-stable";
  auto problems = io::verify_document(dag, back);
  if (!problems.empty()) return doc.command + " document: " + problems.front();
  return {};
}

}  // namespace

std::int64_t feasibility_pass_bound(int n, Thresholds th) {
  return (static_cast<std::int64_t>(n) - 1) * th.t1 / (th.t1 + th.t2) + 2;
}

std::int64_t lambda_pass_bound(int n, const Rational& lambda) {
  return static_cast<std::int64_t>(n) * lambda.den() / (lambda.num() + lambda.den()) + 2;
}

std::string check_lambda_oracles(const Dag& dag) {
  LambdaResult fast = compute_lambda(dag);
  Rational brute = oracle::brute_lambda(dag);
  Rational search = oracle::binary_search_lambda(dag);
  if (fast.lambda != brute || brute != search) {
    return "lambda " + str(fast.lambda) + ", brute " + str(brute) + ", search " + str(search);
  }
  auto ratio = oracle::brute_max_forcing_ratio(dag);
  if (fast.max_forcing_ratio != ratio && !(brute == Rational(0))) {
    return "max forcing ratio disagrees with enumeration";
  }
  return {};
}

std::string check_feasibility(const Dag& dag, Thresholds th) {
  FeasibilityResult r = check_feasible(dag, th);
  if (dag.vertex_count() <= kFeasibleOracleLimit) {
    bool brute = oracle::brute_feasible(dag, th).has_value();
    if (brute != r.feasible()) {
      return "verdict at (" + std::to_string(th.t1) + "," + std::to_string(th.t2) +
             ") differs from brute force";
    }
  }
  if (r.feasible()) {
    if (!verify_assignment(dag, th, r.assignment().alpha).empty()) {
      return "feasible assignment has violations";
    }
  } else {
    Rational ratio = verify_forcing_cycle(dag, r.cycle());
    if (!(ratio > th.ratio())) return "infeasibility cycle ratio " + str(ratio) + " too small";
  }
  if (r.stats().passes > feasibility_pass_bound(dag.vertex_count(), th)) {
    return "feasibility pass bound exceeded";
  }
  return {};
}

std::string check_certificate(const Dag& dag) {
  if (classify_degenerate(dag).levels) return {};
  LambdaCertificate c = certify_lambda(dag);
  const int n = dag.vertex_count();
  if (!verify_assignment(dag, c.thresholds, c.assignment.alpha).empty()) {
    return "certificate assignment has violations";
  }
  if (c.thresholds.ratio() != c.lambda) return "certificate thresholds do not match lambda";
  Rational ratio = verify_forcing_cycle(dag, c.cycle);
  if (ratio != c.max_forcing_ratio) return "certificate cycle ratio differs from maximum";
  if (c.max_forcing_ratio >= Rational(1) && ratio != c.lambda) {
    return "certificate cycle ratio " + str(ratio) + " differs from lambda " + str(c.lambda);
  }
  if (c.lambda.den() > c.lambda.num() || c.lambda.num() + c.lambda.den() > n) {
    return "lambda " + str(c.lambda) + " outside den <= num, num + den <= n";
  }
  return {};
}

std::string check_extendability(const Dag& dag) {
  Rational lambda = compute_lambda(dag).lambda;
  // Weak orders are transitive; their orderings are checked at k = 2.
  int k = lambda == Rational(0) ? 2 : static_cast<int>(lambda.floor()) + 1;
  std::vector<Vertex> order = topological_sort(dag);
  if (!oracle::is_k_clique_extendable(dag, order, k)) {
    return "topological sort is not " + std::to_string(k) + "-clique extendable";
  }
  return {};
}

std::string check_clique(const Dag& dag) {
  if (dag.vertex_count() > kCliqueOracleLimit) return {};
  int opt = oracle::brute_max_clique(dag).value;
  for (bool strict : {false, true}) {
    CliqueSolution s = max_clique_exact(dag, strict);
    if (!is_clique(dag, s.vertices)) return "exact clique output is not a clique";
    if (static_cast<int>(s.vertices.size()) != opt) {
      return "exact clique size " + std::to_string(s.vertices.size()) + " vs optimum " +
             std::to_string(opt);
    }
  }
  Rational lambda = compute_lambda(dag).lambda;
  for (int factor = 1; factor <= 3; ++factor) {
    if (Rational(factor) > lambda) break;
    CliqueSolution s = max_clique_approx(dag, factor);
    if (!is_clique(dag, s.vertices)) return "approximate clique output is not a clique";
    if (static_cast<int>(s.vertices.size()) * factor < opt) {
      return "approximate clique misses factor " + std::to_string(factor);
    }
  }
  return {};
}

std::string check_approximations(const Dag& dag) {
  const int n = dag.vertex_count();
  UtilityModel model = build_utility_model(dag);

  ApproxResult mis = independent_set_approx(dag, model);
  if (mis.sets.size() != 1 || !is_independent(dag, mis.sets[0])) {
    return "independent set output is not independent";
  }
  ApproxResult color = coloring_approx(dag, model);
  ApproxResult cover = clique_cover_approx(dag, model);
  std::vector<int> colored(n, 0), covered(n, 0);
  for (const auto& s : color.sets) {
    if (!is_independent(dag, s)) return "color class is not independent";
    for (Vertex v : s) ++colored[v];
  }
  for (const auto& s : cover.sets) {
    if (!is_clique(dag, s)) return "cover class is not a clique";
    for (Vertex v : s) ++covered[v];
  }
  auto once = [](int c) { return c == 1; };
  if (!std::all_of(colored.begin(), colored.end(), once)) return "coloring is not a partition";
  if (!std::all_of(covered.begin(), covered.end(), once)) return "cover is not a partition";

  const int k = model.factor();
  if (n <= kCliqueOracleLimit) {
    int alpha = oracle::brute_independent_set(dag).value;
    int got = static_cast<int>(mis.sets[0].size());
    if (got * k < alpha || (mis.exact && got != alpha)) return "independent set misses factor";
  }
  if (n <= kPartitionOracleLimit) {
    int chi = oracle::brute_chromatic(dag).value;
    int theta = oracle::brute_clique_cover(dag).value;
    int colors = static_cast<int>(color.sets.size());
    int cliques = static_cast<int>(cover.sets.size());
    if (colors > k * chi || (color.exact && colors != chi)) return "coloring misses factor";
    if (cliques > k * theta || (cover.exact && cliques != theta)) return "cover misses factor";
  }
  return {};
}

std::string check_transitivity(const Dag& dag) {
  if (compute_lambda(dag).lambda < Rational(2) && !is_transitive(dag)) {
    return "lambda below 2 on an intransitive dag";
  }
  return {};
}

std::string check_round_trip(const Dag& dag) {
  std::vector<io::ResultDocument> docs;
  docs.push_back(io::lambda_document(dag, compute_lambda(dag)));
  for (Thresholds th : {Thresholds{1, 1}, Thresholds{1, 2}, Thresholds{2, 3}}) {
    docs.push_back(io::check_document(dag, th, check_feasible(dag, th)));
  }
  if (!classify_degenerate(dag).levels) {
    docs.push_back(io::certify_document(dag, certify_lambda(dag)));
  }
  docs.push_back(io::clique_document(dag, max_clique_exact(dag), 1, false));
  docs.push_back(io::approx_document(dag, "independent_set", independent_set_approx(dag)));
  docs.push_back(io::approx_document(dag, "coloring", coloring_approx(dag)));
  docs.push_back(io::approx_document(dag, "clique_cover", clique_cover_approx(dag)));
  for (const auto& doc : docs) {
    if (std::string bad = round_trip_one(dag, doc); !bad.empty()) return bad;
  }
  if (io::parse_instance(io::emit_instance(dag)).edges().size() != dag.edges().size()) {
    return "instance round-trip lost edges";
  }
  return {};
}

std::string check_pass_bounds(const Dag& dag) {
  const int n = dag.vertex_count();
  LambdaResult lr = compute_lambda(dag);
  if (lr.stats.passes > lambda_pass_bound(n, lr.lambda)) return "lambda pass bound exceeded";
  if (lr.max_forcing_ratio && lr.stats.passes > lambda_pass_bound(n, *lr.max_forcing_ratio)) {
    return "lambda pass bound exceeded at the maximum forcing ratio";
  }
  if (classify_degenerate(dag).levels) return {};
  LambdaCertificate c = certify_lambda(dag);
  if (c.assignment_stats.passes > feasibility_pass_bound(n, c.thresholds)) {
    return "assignment pass bound exceeded";
  }
  Thresholds rho{c.max_forcing_ratio.den(), c.max_forcing_ratio.num()};
  if (c.cycle_stats.passes > feasibility_pass_bound(n, rho)) return "cycle pass bound exceeded";
  return {};
}

std::vector<Dag> corpus(int max_n, int random_count, std::uint64_t seed) {
  std::vector<Dag> out;
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    for (Dag& d : oracle::all_dags(n)) out.push_back(std::move(d));
  }
  if (max_n < 5) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(5, max_n);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < random_count; ++i) {
    int n = size(rng);
    double p = density(rng);
    out.push_back(oracle::random_dag(n, p, rng()));
  }
  return out;
}

json run_selftest(int max_n, int random_count, std::uint64_t seed) {
  if (max_n < 1 || max_n > kCliqueOracleLimit || random_count < 0) {
    throw Error(ErrorCode::kBadParams, "selftest needs 1 <= max-n <= 12");
  }
  auto start = std::chrono::steady_clock::now();
  std::vector<Dag> dags = corpus(max_n, random_count, seed);

  using Check = std::string (*)(const Dag&);
  const std::vector<std::pair<std::string, Check>> checks = {
      {"lambda", check_lambda_oracles},
      {"feasibility",
       [](const Dag& d) {
         for (Thresholds th : {Thresholds{1, 1}, Thresholds{1, 2}, Thresholds{2, 3},
                               Thresholds{1, 3}}) {
           if (std::string bad = check_feasibility(d, th); !bad.empty()) return bad;
         }
         return std::string();
       }},
      {"certificate", check_certificate},
      {"extendability", check_extendability},
      {"clique", check_clique},
      {"approximations", check_approximations},
      {"transitivity", check_transitivity},
      {"round_trip", check_round_trip},
      {"pass_bounds", check_pass_bounds},
  };

  json counts = json::object();
  json failures = json::array();
  bool ok = true;
  for (const auto& [name, check] : checks) {
    int failed = 0;
    for (std::size_t i = 0; i < dags.size(); ++i) {
      std::string bad;
      try {
        bad = check(dags[i]);
      } catch (const std::exception& e) {
        bad = std::string("exception: ") + e.what();
      }
      if (bad.empty()) continue;
      ++failed;
      if (failures.size() < 20) {
        failures.push_back({{"check", name}, {"instance", i}, {"problem", bad}});
      }
    }
    counts[name] = {{"run", dags.size()}, {"failed", failed}};
    ok = ok && failed == 0;
  }
  return {{"instances", dags.size()},
          {"max_n", max_n},
          {"random_count", random_count},
          {"seed", seed},
          {"checks", counts},
          {"failures", failures},
          {"ok", ok},
          {"elapsed_ms", ms_since(start)}};
}

json run_bench(const std::string& family, const std::vector<int>& sizes, double p,
               std::uint64_t seed) {
  if (sizes.empty()) throw Error(ErrorCode::kBadParams, "bench needs at least one size");
  json rows = json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    Dag dag = oracle::generate(family, sizes[i], p, seed + i);
    const int n = dag.vertex_count();
    json row = {{"n", n}, {"m", dag.edge_count()}};

    auto start = std::chrono::steady_clock::now();
    LambdaResult lr = compute_lambda(dag);
    row["lambda_ms"] = ms_since(start);
    row["lambda"] = {{"num", lr.lambda.num()}, {"den", lr.lambda.den()}};
    row["lambda_passes"] = lr.stats.passes;
    row["lambda_bound"] = lambda_pass_bound(n, lr.lambda);
    row["table_cells"] = lr.stats.table_cells;
    bool ok = lr.stats.passes <= row["lambda_bound"].get<std::int64_t>();

    if (lr.max_forcing_ratio) {
      start = std::chrono::steady_clock::now();
      LambdaCertificate c = certify_lambda(dag);
      row["certify_ms"] = ms_since(start);
      Thresholds rho{c.max_forcing_ratio.den(), c.max_forcing_ratio.num()};
      row["assignment_passes"] = c.assignment_stats.passes;
      row["assignment_bound"] = feasibility_pass_bound(n, c.thresholds);
      row["cycle_passes"] = c.cycle_stats.passes;
      row["cycle_bound"] = feasibility_pass_bound(n, rho);
      ok = ok && c.assignment_stats.passes <= row["assignment_bound"].get<std::int64_t>() &&
           c.cycle_stats.passes <= row["cycle_bound"].get<std::int64_t>();
    } else {
      row["degenerate"] = true;
    }
    row["bounds_ok"] = ok;
    all_ok = all_ok && ok;
    rows.push_back(std::move(row));
  }
  return {{"family", family}, {"p", p}, {"seed", seed}, {"rows", rows}, {"bounds_ok", all_ok}};
}

}  // namespace dtg::harness
