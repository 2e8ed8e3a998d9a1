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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Exact rational comparisons throughout; only wall-clock limits have slack.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dtg/approx.hpp"
#include "dtg/clique.hpp"
#include "dtg/harness.hpp"
#include "dtg/io.hpp"
#include "dtg/lambda.hpp"
#include "dtg/oracles.hpp"

using namespace dtg;

namespace {

constexpr double kPathSeconds = 1.0;
constexpr double kOracleSeconds = 60.0;
constexpr double kSmokeSeconds = 10.0;
constexpr int kRandomCount = 1000;
constexpr std::uint64_t kSeed = 20261017;

int failed_criteria = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& id, bool pass, const std::string& text) {
  std::printf("%s %-3s %s\n", pass ? "PASS" : "FAIL", id.c_str(), text.c_str());
  std::fflush(stdout);
  if (!pass) ++failed_criteria;
}

template <typename... Args>
std::string fmt(const char* format, Args... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

// Counts a per-instance predicate and keeps the first failure.
struct Tally {
  long long run = 0;
  long long bad = 0;
  std::string first;

  void add(bool ok, std::size_t index, const std::string& problem = "failed") {
    ++run;
    if (ok) return;
    if (bad++ == 0) first = fmt("instance %zu: ", index) + problem;
  }
  void add_check(const std::string& problem, std::size_t index) {
    add(problem.empty(), index, problem);
  }
  bool ok() const { return bad == 0; }
  std::string summary() const {
    std::string s = fmt("%lld checked, %lld failed", run, bad);
    if (bad) s += " (" + first + ")";
    return s;
  }
};

template <typename F>
std::string guard(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

std::vector<Dag> build_corpus() {
  std::vector<Dag> corpus = oracle::all_dags(4);
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> size(5, 8);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < kRandomCount; ++i) {
    int n = size(rng);
    double p = density(rng);
    corpus.push_back(oracle::random_dag(n, p, rng()));
  }
  return corpus;
}

bool degenerate(const Dag& d) { return classify_degenerate(d).levels.has_value(); }

const Thresholds kPairs[] = {{1, 1}, {1, 2}, {2, 3}, {1, 3}};

void criterion_paths() {
  auto start = Clock::now();
  Tally t;
  for (int n = 3; n <= 12; ++n) {
    Rational got = compute_lambda(oracle::path(n)).lambda;
    t.add(got == Rational(n - 1), n, "lambda " + got.to_string());
  }
  double s = seconds_since(start);
  report("1", t.ok() && s < kPathSeconds,
         "path(n) has lambda n-1 for n in 3..12: " + t.summary() + fmt(", %.4f s", s));
}

void criterion_chain() {
  Tally t;
  for (int n = 4; n <= 12; ++n) {
    Dag d = oracle::chain_plus_isolated(n);
    Rational expected(n - 2, 2);
    Rational fast = compute_lambda(d).lambda;
    Rational brute = oracle::brute_lambda(d);
    t.add(fast == expected && brute == expected, n,
          "lambda " + fast.to_string() + ", brute " + brute.to_string());
  }
  report("2", t.ok(), "chain+isolated has lambda (n-2)/2 for n in 4..12: " + t.summary());
}

void criterion_oracles(const std::vector<Dag>& corpus) {
  auto start = Clock::now();
  Tally t;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    t.add_check(guard([&] { return harness::check_lambda_oracles(corpus[i]); }), i);
  }
  double s = seconds_since(start);
  report("3", t.ok() && s < kOracleSeconds,
         "lambda = brute force = binary search: " + t.summary() + fmt(", %.2f s", s));
}

void criterion_feasibility(const std::vector<Dag>& corpus) {
  Tally t;
  long long feasible = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (Thresholds th : kPairs) {
      t.add_check(guard([&] { return harness::check_feasibility(corpus[i], th); }), i);
      feasible += check_feasible(corpus[i], th).feasible();
    }
  }
  report("4", t.ok(),
         "verdicts match Floyd-Warshall at (1,1),(1,2),(2,3),(1,3), certificates verify: " +
             t.summary() + fmt(" [%lld feasible, %lld infeasible]", feasible, t.run - feasible));
}

void criterion_certificates(const std::vector<Dag>& corpus) {
  Tally assignment, exact, shape, clamped;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Dag& d = corpus[i];
    if (degenerate(d)) continue;
    std::string problem = guard([&]() -> std::string {
      LambdaCertificate c = certify_lambda(d);
      const Rational& lambda = c.lambda;
      assignment.add(verify_assignment(d, c.thresholds, c.assignment.alpha).empty() &&
                         c.thresholds == Thresholds{lambda.den(), lambda.num()},
                     i, "assignment fails at (den, num)");
      shape.add(lambda.den() <= lambda.num() && lambda.num() + lambda.den() <= d.vertex_count(),
                i, "lambda " + lambda.to_string());
      Rational ratio = verify_forcing_cycle(d, c.cycle);
      if (c.max_forcing_ratio < Rational(1)) {
        clamped.add(ratio == c.max_forcing_ratio &&
                        oracle::brute_max_forcing_ratio(d) == ratio && lambda == Rational(1),
                    i, "cycle ratio " + ratio.to_string());
      } else {
        exact.add(ratio == lambda, i, "cycle ratio " + ratio.to_string());
      }
      return {};
    });
    if (!problem.empty()) assignment.add(false, i, problem);
  }
  report("5", assignment.ok() && exact.ok() && shape.ok(),
         "assignments verify at (den, num): " + assignment.summary() +
             "; cycle ratio exactly num/den: " + exact.summary() +
             "; den <= num and num+den <= n: " + shape.summary());
  report("5b", clamped.ok(),
         "instances whose maximum forcing ratio is below 1 (lambda clamped to 1, so no "
         "cycle of ratio num/den exists): cycle ratio equals the enumerated maximum: " +
             clamped.summary());
}

void criterion_extendability(const std::vector<Dag>& corpus) {
  Tally t, weak;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Dag& d = corpus[i];
    std::string problem = guard([&] { return harness::check_extendability(d); });
    (degenerate(d) ? weak : t).add_check(problem, i);
  }
  report("6", t.ok(),
         "topological sorts are k-clique extendable at k = floor(lambda)+1 "
         "(nondegenerate): " + t.summary());
  report("6b", weak.ok(),
         "weak orders (lambda 0, checked at k = 2 since k = 1 needs a complete graph): " +
             weak.summary());
}

void criterion_clique(const std::vector<Dag>& corpus) {
  Tally t;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    t.add_check(guard([&] { return harness::check_clique(corpus[i]); }), i);
  }
  report("7", t.ok(),
         "exact clique = brute force (both modes); approx(i) size * i >= optimum for "
         "i in {1,2,3}, i <= lambda: " + t.summary());
}

void criterion_approximations(const std::vector<Dag>& corpus) {
  Tally t;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    t.add_check(guard([&] { return harness::check_approximations(corpus[i]); }), i);
  }
  report("8", t.ok(),
         "independent set, coloring, clique cover feasible and within floor(lambda)+1: " +
             t.summary());
}

void criterion_transitivity(const std::vector<Dag>& corpus) {
  Tally t;
  long long below_two = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    below_two += compute_lambda(corpus[i]).lambda < Rational(2);
    t.add_check(guard([&] { return harness::check_transitivity(corpus[i]); }), i);
  }
  report("9", t.ok(),
         "lambda < 2 implies transitive: " + t.summary() + fmt(" [%lld below 2]", below_two));
}

void criterion_bounds(const std::vector<Dag>& corpus) {
  Tally t;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    t.add_check(guard([&] { return harness::check_pass_bounds(corpus[i]); }), i);
    for (Thresholds th : kPairs) {
      int passes = check_feasible(corpus[i], th).stats().passes;
      t.add(passes <= harness::feasibility_pass_bound(corpus[i].vertex_count(), th), i,
            "feasibility passes");
    }
  }
  for (int n = 3; n <= 40; ++n) {
    t.add_check(harness::check_pass_bounds(oracle::path(n)), corpus.size());
    t.add_check(harness::check_pass_bounds(oracle::chain_plus_isolated(n)), corpus.size());
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    t.add_check(harness::check_pass_bounds(oracle::random_dag(200, 0.01 + 0.005 * seed, seed)),
                corpus.size());
  }

  Dag big = oracle::random_dag(2000, 0.01, kSeed);
  auto start = Clock::now();
  LambdaResult lr = compute_lambda(big);
  double s = seconds_since(start);
  bool big_ok = lr.stats.passes <= harness::lambda_pass_bound(2000, lr.lambda);
  report("10", t.ok() && big_ok && s < kSmokeSeconds,
         "pass counts within floor((n-1)/(r+1))+2 and floor(n/(lambda+1))+2: " + t.summary() +
             fmt("; n=2000 m=%lld lambda=%s in %.3f s (%d passes)", big.edge_count(),
                 lr.lambda.to_string().c_str(), s, lr.stats.passes));
}

void criterion_round_trip(const std::vector<Dag>& corpus) {
  Tally t;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    t.add_check(guard([&] { return harness::check_round_trip(corpus[i]); }), i);
  }
  report("11", t.ok(), "emitted documents re-verify after a round-trip: " + t.summary());
}

}  // namespace

int main() {
  auto start = Clock::now();
  const std::vector<Dag> corpus = build_corpus();
  std::printf("corpus: %zu dags (all 543 on 4 vertices, %d seeded random on 5..8)\n",
              corpus.size(), kRandomCount);
  criterion_paths();
  criterion_chain();
  criterion_oracles(corpus);
  criterion_feasibility(corpus);
  criterion_certificates(corpus);
  criterion_extendability(corpus);
  criterion_clique(corpus);
  criterion_approximations(corpus);
  criterion_transitivity(corpus);
  criterion_bounds(corpus);
  criterion_round_trip(corpus);
  std::printf("%s: %d failing line(s), %.2f s\n", failed_criteria ? "FAILED" : "ALL PASSED",
              failed_criteria, seconds_since(start));
  return failed_criteria ? 1 : 0;
}
