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


#include "dtg/dtg.h"

#include <chrono>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "dtg/approx.hpp"
#include "dtg/clique.hpp"
#include "dtg/error.hpp"
#include "dtg/harness.hpp"
#include "dtg/io.hpp"
#include "dtg/lambda.hpp"
#include "dtg/oracles.hpp"

struct dtg_graph {
  dtg::Dag dag;
};

struct dtg_result {
  dtg::io::ResultDocument doc;
  std::string json;
  std::vector<std::vector<int32_t>> sets;
};

namespace {

thread_local std::string last_error;

dtg_status status_of(dtg::ErrorCode code) {
  using dtg::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return DTG_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParseError: return DTG_ERR_PARSE;
    case ErrorCode::kVertexOutOfRange: return DTG_ERR_VERTEX_OUT_OF_RANGE;
    case ErrorCode::kCycleDetected: return DTG_ERR_CYCLE;
    case ErrorCode::kDuplicateEdge: return DTG_ERR_DUPLICATE_EDGE;
    case ErrorCode::kSelfLoop: return DTG_ERR_SELF_LOOP;
    case ErrorCode::kInvalidThresholds: return DTG_ERR_INVALID_THRESHOLDS;
    case ErrorCode::kMissingVertex: return DTG_ERR_MISSING_VERTEX;
    case ErrorCode::kNotSimple: return DTG_ERR_NOT_SIMPLE;
    case ErrorCode::kWrongStepKind: return DTG_ERR_WRONG_STEP_KIND;
    case ErrorCode::kDegenerateInput: return DTG_ERR_DEGENERATE;
    case ErrorCode::kInvalidFactor: return DTG_ERR_INVALID_FACTOR;
    case ErrorCode::kNonpositiveWeight: return DTG_ERR_NONPOSITIVE_WEIGHT;
    case ErrorCode::kTooLarge: return DTG_ERR_TOO_LARGE;
    case ErrorCode::kBadParams: return DTG_ERR_BAD_PARAMS;
    case ErrorCode::kOverflow: return DTG_ERR_OVERFLOW;
    case ErrorCode::kInternal: return DTG_ERR_INTERNAL;
  }
  return DTG_ERR_INTERNAL;
}

dtg_status fail(dtg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into a status and a thread-local message.
template <typename F>
dtg_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const dtg::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(DTG_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DTG_ERR_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(DTG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DTG_ERR_INTERNAL, "unknown exception");
  }
}

dtg_status require(bool ok, const char* what) {
  return ok ? DTG_OK : fail(DTG_ERR_INVALID_ARGUMENT, what);
}

dtg_result* make_result(dtg::io::ResultDocument doc) {
  auto* r = new dtg_result{std::move(doc), {}, {}};
  r->json = dtg::io::emit_document(r->doc);
  if (r->doc.solution) {
    for (const auto& s : r->doc.solution->sets) r->sets.emplace_back(s.begin(), s.end());
  }
  return r;
}

// Times `compute`, checks the document it builds against the graph, stores it.
template <typename F>
dtg_status run_document(const dtg_graph* g, dtg_result** out, F&& compute) {
  if (dtg_status s = require(g && out, "null graph or output pointer"); s != DTG_OK) return s;
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    dtg::io::ResultDocument doc = compute(g->dag);
    double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (doc.instrumentation.is_null()) doc.instrumentation = nlohmann::json::object();
    doc.instrumentation["elapsed_ms"] = elapsed;
    auto problems = dtg::io::verify_document(g->dag, doc);
    *out = make_result(std::move(doc));
    if (!problems.empty()) return fail(DTG_ERR_VERIFY, problems.front());
    if ((*out)->doc.feasible == false) return DTG_INFEASIBLE;
    return DTG_OK;
  });
}

dtg_status run_report(dtg_result** out, const std::string& command, nlohmann::json report,
                      const char* flag) {
  dtg::io::ResultDocument doc;
  doc.command = command;
  bool ok = report.at(flag).get<bool>();
  doc.report = std::move(report);
  *out = make_result(std::move(doc));
  return ok ? DTG_OK : fail(DTG_ERR_VERIFY, command + " reported failures");
}

}  // namespace

extern "C" {

const char* dtg_version(void) { return "0.1.0"; }

const char* dtg_status_name(dtg_status status) {
  switch (status) {
    case DTG_OK: return "ok";
    case DTG_INFEASIBLE: return "infeasible";
    case DTG_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case DTG_ERR_PARSE: return "parse_error";
    case DTG_ERR_VERTEX_OUT_OF_RANGE: return "vertex_out_of_range";
    case DTG_ERR_CYCLE: return "cycle_detected";
    case DTG_ERR_DUPLICATE_EDGE: return "duplicate_edge";
    case DTG_ERR_SELF_LOOP: return "self_loop";
    case DTG_ERR_INVALID_THRESHOLDS: return "invalid_thresholds";
    case DTG_ERR_MISSING_VERTEX: return "missing_vertex";
    case DTG_ERR_NOT_SIMPLE: return "not_simple";
    case DTG_ERR_WRONG_STEP_KIND: return "wrong_step_kind";
    case DTG_ERR_DEGENERATE: return "degenerate_input";
    case DTG_ERR_INVALID_FACTOR: return "invalid_factor";
    case DTG_ERR_NONPOSITIVE_WEIGHT: return "nonpositive_weight";
    case DTG_ERR_TOO_LARGE: return "too_large";
    case DTG_ERR_BAD_PARAMS: return "bad_params";
    case DTG_ERR_OVERFLOW: return "overflow";
    case DTG_ERR_VERIFY: return "verify_failed";
    case DTG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* dtg_last_error(void) { return last_error.c_str(); }

void dtg_string_free(char* s) { delete[] s; }

dtg_status dtg_graph_create(int32_t n, const int32_t* edges, int64_t m, dtg_graph** out) {
  if (dtg_status s = require(out && m >= 0 && (edges || m == 0), "bad graph arguments");
      s != DTG_OK) {
    return s;
  }
  return guarded([&] {
    std::vector<dtg::Edge> list(static_cast<std::size_t>(m));
    for (int64_t i = 0; i < m; ++i) list[i] = {edges[2 * i], edges[2 * i + 1]};
    *out = new dtg_graph{dtg::Dag::build(n, list)};
    return DTG_OK;
  });
}

dtg_status dtg_graph_parse(const char* text, dtg_graph** out) {
  if (dtg_status s = require(text && out, "null text or output pointer"); s != DTG_OK) return s;
  return guarded([&] {
    *out = new dtg_graph{dtg::io::parse_instance(text)};
    return DTG_OK;
  });
}

dtg_status dtg_graph_generate(const char* family, int32_t n, double p, uint64_t seed,
                              dtg_graph** out) {
  if (dtg_status s = require(family && out, "null family or output pointer"); s != DTG_OK) {
    return s;
  }
  return guarded([&] {
    *out = new dtg_graph{dtg::oracle::generate(family, n, p, seed)};
    return DTG_OK;
  });
}

dtg_status dtg_graph_emit(const dtg_graph* g, char** out) {
  if (dtg_status s = require(g && out, "null graph or output pointer"); s != DTG_OK) return s;
  return guarded([&] {
    std::string text = dtg::io::emit_instance(g->dag);
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
    return DTG_OK;
  });
}

int32_t dtg_graph_vertex_count(const dtg_graph* g) { return g ? g->dag.vertex_count() : 0; }

int64_t dtg_graph_edge_count(const dtg_graph* g) { return g ? g->dag.edge_count() : 0; }

void dtg_graph_destroy(dtg_graph* g) { delete g; }

dtg_status dtg_parse_thresholds(const char* t1, const char* t2, int64_t* out_t1,
                                int64_t* out_t2) {
  if (dtg_status s = require(t1 && t2 && out_t1 && out_t2, "null threshold argument");
      s != DTG_OK) {
    return s;
  }
  return guarded([&] {
    dtg::Thresholds th = dtg::io::parse_thresholds(t1, t2);
    *out_t1 = th.t1;
    *out_t2 = th.t2;
    return DTG_OK;
  });
}

dtg_status dtg_lambda(const dtg_graph* g, dtg_result** out) {
  return run_document(g, out, [](const dtg::Dag& d) {
    return dtg::io::lambda_document(d, dtg::compute_lambda(d));
  });
}

dtg_status dtg_check(const dtg_graph* g, int64_t t1, int64_t t2, dtg_result** out) {
  return run_document(g, out, [&](const dtg::Dag& d) {
    dtg::Thresholds th{t1, t2};
    return dtg::io::check_document(d, th, dtg::check_feasible(d, th));
  });
}

dtg_status dtg_certify(const dtg_graph* g, dtg_result** out) {
  return run_document(g, out, [](const dtg::Dag& d) {
    return dtg::io::certify_document(d, dtg::certify_lambda(d));
  });
}

dtg_status dtg_clique(const dtg_graph* g, int32_t approx, int32_t strict, dtg_result** out) {
  return run_document(g, out, [&](const dtg::Dag& d) {
    dtg::CliqueSolution s = approx <= 1 ? dtg::max_clique_exact(d, strict != 0)
                                        : dtg::max_clique_approx(d, approx);
    return dtg::io::clique_document(d, s, approx <= 1 ? 1 : approx, strict != 0);
  });
}

dtg_status dtg_independent_set(const dtg_graph* g, dtg_result** out) {
  return run_document(g, out, [](const dtg::Dag& d) {
    return dtg::io::approx_document(d, "independent_set", dtg::independent_set_approx(d));
  });
}

dtg_status dtg_coloring(const dtg_graph* g, dtg_result** out) {
  return run_document(g, out, [](const dtg::Dag& d) {
    return dtg::io::approx_document(d, "coloring", dtg::coloring_approx(d));
  });
}

dtg_status dtg_clique_cover(const dtg_graph* g, dtg_result** out) {
  return run_document(g, out, [](const dtg::Dag& d) {
    return dtg::io::approx_document(d, "clique_cover", dtg::clique_cover_approx(d));
  });
}

dtg_status dtg_bench(const char* family, const int32_t* sizes, size_t count, double p,
                     uint64_t seed, dtg_result** out) {
  if (dtg_status s = require(family && out && (sizes || count == 0), "bad bench arguments");
      s != DTG_OK) {
    return s;
  }
  return guarded([&] {
    std::vector<int> list(sizes, sizes + count);
    return run_report(out, "bench", dtg::harness::run_bench(family, list, p, seed),
                      "bounds_ok");
  });
}

dtg_status dtg_selftest(int32_t max_n, int32_t random_count, uint64_t seed, dtg_result** out) {
  if (dtg_status s = require(out != nullptr, "null output pointer"); s != DTG_OK) return s;
  return guarded([&] {
    return run_report(out, "selftest", dtg::harness::run_selftest(max_n, random_count, seed),
                      "ok");
  });
}

dtg_status dtg_verify_document(const dtg_graph* g, const char* json_text) {
  if (dtg_status s = require(g && json_text, "null graph or document"); s != DTG_OK) return s;
  return guarded([&] {
    auto problems = dtg::io::verify_document(g->dag, dtg::io::parse_document(json_text));
    if (problems.empty()) return DTG_OK;
    std::string message;
    for (const auto& p : problems) message += (message.empty() ? "" : "; ") + p;
    return fail(DTG_ERR_VERIFY, message);
  });
}

const char* dtg_result_json(const dtg_result* r) { return r ? r->json.c_str() : ""; }

int32_t dtg_result_feasible(const dtg_result* r) {
  if (!r || !r->doc.feasible) return -1;
  return *r->doc.feasible ? 1 : 0;
}

dtg_status dtg_result_lambda(const dtg_result* r, int64_t* num, int64_t* den) {
  if (dtg_status s = require(r && num && den, "null result or output"); s != DTG_OK) return s;
  if (!r->doc.lambda) return fail(DTG_ERR_INVALID_ARGUMENT, "result carries no lambda");
  *num = r->doc.lambda->num();
  *den = r->doc.lambda->den();
  return DTG_OK;
}

const int64_t* dtg_result_alpha(const dtg_result* r, size_t* length) {
  if (!r || !r->doc.assignment) {
    if (length) *length = 0;
    return nullptr;
  }
  if (length) *length = r->doc.assignment->alpha.size();
  return r->doc.assignment->alpha.data();
}

size_t dtg_result_set_count(const dtg_result* r) { return r ? r->sets.size() : 0; }

const int32_t* dtg_result_set(const dtg_result* r, size_t index, size_t* length) {
  if (!r || index >= r->sets.size()) {
    if (length) *length = 0;
    return nullptr;
  }
  if (length) *length = r->sets[index].size();
  return r->sets[index].data();
}

void dtg_result_destroy(dtg_result* r) { delete r; }

}  // extern "C"
