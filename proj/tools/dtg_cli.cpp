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


// dtg command-line front end. Documents go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 infeasible (check), 2 input error, 3 internal or
// verification failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dtg/dtg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int exit_code(dtg_status s) {
  switch (s) {
    case DTG_OK: return kExitOk;
    case DTG_INFEASIBLE: return kExitInfeasible;
    case DTG_ERR_VERIFY:
    case DTG_ERR_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

int report_failure(dtg_status s) {
  std::cerr << "dtg: " << dtg_status_name(s) << ": " << dtg_last_error() << "\n";
  return exit_code(s);
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// "n=10,p=0.3" -> {n: "10", p: "0.3"}.
std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("param '" + item + "' is not key=value");
    std::string key = item.substr(0, eq);
    if (key != "n" && key != "p") throw InputError("unknown param '" + key + "'");
    out[key] = item.substr(eq + 1);
  }
  return out;
}

template <typename T>
T number(const std::string& text, const std::string& what) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value) || !in.eof()) throw InputError("bad " + what + " '" + text + "'");
  return value;
}

// Prints the result document (if any) and maps the status to an exit code.
int finish(dtg_status s, dtg_result* r) {
  if (r) std::cout << dtg_result_json(r);
  if (s != DTG_OK && s != DTG_INFEASIBLE) report_failure(s);
  dtg_result_destroy(r);
  return exit_code(s);
}

template <typename F>
int on_file(const std::string& path, F&& run) {
  std::string text = read_input(path);
  dtg_graph* g = nullptr;
  if (dtg_status s = dtg_graph_parse(text.c_str(), &g); s != DTG_OK) {
    std::cerr << path << ": ";
    return report_failure(s);
  }
  dtg_result* r = nullptr;
  dtg_status s = run(g, &r);
  dtg_graph_destroy(g);
  return finish(s, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dtg: double-threshold digraph toolkit"};
  app.set_version_flag("--version", dtg_version());
  app.require_subcommand(1);

  std::string file;
  std::string t1, t2;
  int approx = 1;
  bool strict = false;
  std::string family, params, sizes_text;
  unsigned long long seed = 1;
  int max_n = 7;
  int count = 200;

  auto* lambda = app.add_subcommand("lambda", "threshold ratio lambda of a dag");
  auto* check = app.add_subcommand("check", "feasibility at thresholds t1 <= t2");
  auto* certify = app.add_subcommand("certify", "lambda with assignment and forcing cycle");
  auto* clique = app.add_subcommand("clique", "maximum clique");
  auto* mis = app.add_subcommand("mis", "approximate maximum independent set");
  auto* color = app.add_subcommand("color", "approximate minimum coloring");
  auto* cover = app.add_subcommand("cover", "approximate minimum clique cover");
  for (auto* sub : {lambda, check, certify, clique, mis, color, cover}) {
    sub->add_option("file", file, "instance file, - for stdin")->required();
  }
  check->add_option("--t1", t1, "lower threshold, integer or p/q")->required();
  check->add_option("--t2", t2, "upper threshold, integer or p/q")->required();
  clique->add_option("--approx", approx, "approximation factor, at most lambda");
  clique->add_flag("--strict", strict, "skip the 2- and 3-extendability attempts");

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--family", family, "path|chain|tournament|edgeless|random|coloring")
      ->required();
  gen->add_option("--params", params, "n=N,p=P");
  gen->add_option("--seed", seed, "generator seed");

  auto* bench = app.add_subcommand("bench", "instrumented pass counts per size");
  bench->add_option("--family", family, "generator family")->required();
  bench->add_option("--sizes", sizes_text, "comma-separated vertex counts")->required();
  bench->add_option("--params", params, "p=P");
  bench->add_option("--seed", seed, "generator seed");

  auto* selftest = app.add_subcommand("selftest", "cross-check against brute-force oracles");
  selftest->add_option("--max-n", max_n, "largest instance size, 1..12");
  selftest->add_option("--count", count, "random instances beyond the exhaustive ones");
  selftest->add_option("--seed", seed, "corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*lambda) return on_file(file, [](dtg_graph* g, dtg_result** r) { return dtg_lambda(g, r); });
    if (*certify) {
      return on_file(file, [](dtg_graph* g, dtg_result** r) { return dtg_certify(g, r); });
    }
    if (*mis) {
      return on_file(file, [](dtg_graph* g, dtg_result** r) { return dtg_independent_set(g, r); });
    }
    if (*color) {
      return on_file(file, [](dtg_graph* g, dtg_result** r) { return dtg_coloring(g, r); });
    }
    if (*cover) {
      return on_file(file, [](dtg_graph* g, dtg_result** r) { return dtg_clique_cover(g, r); });
    }
    if (*clique) {
      return on_file(file, [&](dtg_graph* g, dtg_result** r) {
        return dtg_clique(g, approx, strict ? 1 : 0, r);
      });
    }
    if (*check) {
      int64_t a = 0, b = 0;
      if (dtg_status s = dtg_parse_thresholds(t1.c_str(), t2.c_str(), &a, &b); s != DTG_OK) {
        return report_failure(s);
      }
      return on_file(file, [&](dtg_graph* g, dtg_result** r) { return dtg_check(g, a, b, r); });
    }
    auto kv = parse_params(params);
    double p = kv.count("p") ? number<double>(kv["p"], "p") : 0.5;
    if (*gen) {
      if (!kv.count("n")) throw InputError("gen needs --params n=N");
      dtg_graph* g = nullptr;
      dtg_status s = dtg_graph_generate(family.c_str(), number<int>(kv["n"], "n"), p, seed, &g);
      if (s != DTG_OK) return report_failure(s);
      char* text = nullptr;
      s = dtg_graph_emit(g, &text);
      dtg_graph_destroy(g);
      if (s != DTG_OK) return report_failure(s);
      std::cout << text;
      dtg_string_free(text);
      return kExitOk;
    }
    if (*bench) {
      std::vector<int32_t> sizes;
      std::stringstream in(sizes_text);
      for (std::string item; std::getline(in, item, ',');) {
        if (!item.empty()) sizes.push_back(number<int32_t>(item, "size"));
      }
      dtg_result* r = nullptr;
      dtg_status s = dtg_bench(family.c_str(), sizes.data(), sizes.size(), p, seed, &r);
      return finish(s, r);
    }
    if (*selftest) {
      dtg_result* r = nullptr;
      dtg_status s = dtg_selftest(max_n, count, seed, &r);
      return finish(s, r);
    }
  } catch (const InputError& e) {
    std::cerr << "dtg: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
