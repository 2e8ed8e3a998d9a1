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


/* C interface to the dtg library. All objects are opaque handles. Every
 * function that can fail returns a dtg_status; on failure the message for
 * the calling thread is available from dtg_last_error(). */

#ifndef DTG_DTG_H_
#define DTG_DTG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DTG_API __declspec(dllexport)
#else
#define DTG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dtg_graph dtg_graph;
typedef struct dtg_result dtg_result;

typedef enum dtg_status {
  DTG_OK = 0,
  DTG_INFEASIBLE = 1, /* dtg_check: result holds a forcing cycle */
  DTG_ERR_INVALID_ARGUMENT = 2,
  DTG_ERR_PARSE = 3,
  DTG_ERR_VERTEX_OUT_OF_RANGE = 4,
  DTG_ERR_CYCLE = 5,
  DTG_ERR_DUPLICATE_EDGE = 6,
  DTG_ERR_SELF_LOOP = 7,
  DTG_ERR_INVALID_THRESHOLDS = 8,
  DTG_ERR_MISSING_VERTEX = 9,
  DTG_ERR_NOT_SIMPLE = 10,
  DTG_ERR_WRONG_STEP_KIND = 11,
  DTG_ERR_DEGENERATE = 12,
  DTG_ERR_INVALID_FACTOR = 13,
  DTG_ERR_NONPOSITIVE_WEIGHT = 14,
  DTG_ERR_TOO_LARGE = 15,
  DTG_ERR_BAD_PARAMS = 16,
  DTG_ERR_OVERFLOW = 17,
  DTG_ERR_VERIFY = 18, /* an output failed its own re-verification */
  DTG_ERR_INTERNAL = 19
} dtg_status;

DTG_API const char* dtg_version(void);
DTG_API const char* dtg_status_name(dtg_status status);
/* Message of the last failure on this thread; "" if none. */
DTG_API const char* dtg_last_error(void);
DTG_API void dtg_string_free(char* s);

/* Graphs. `edges` holds m (from, to) pairs, 2m ints in total. */
DTG_API dtg_status dtg_graph_create(int32_t n, const int32_t* edges, int64_t m,
                                    dtg_graph** out);
DTG_API dtg_status dtg_graph_parse(const char* text, dtg_graph** out);
/* Families: path, chain, tournament, edgeless, random, coloring. */
DTG_API dtg_status dtg_graph_generate(const char* family, int32_t n, double p,
                                      uint64_t seed, dtg_graph** out);
/* Instance text, released with dtg_string_free. */
DTG_API dtg_status dtg_graph_emit(const dtg_graph* g, char** out);
DTG_API int32_t dtg_graph_vertex_count(const dtg_graph* g);
DTG_API int64_t dtg_graph_edge_count(const dtg_graph* g);
DTG_API void dtg_graph_destroy(dtg_graph* g);

/* Accepts integers or "p/q"; writes the pair scaled to integers. */
DTG_API dtg_status dtg_parse_thresholds(const char* t1, const char* t2,
                                        int64_t* out_t1, int64_t* out_t2);

/* Algorithms. Each fills *out with a result document; outputs are
 * re-verified before returning, DTG_ERR_VERIFY signals a failed check. */
DTG_API dtg_status dtg_lambda(const dtg_graph* g, dtg_result** out);
DTG_API dtg_status dtg_check(const dtg_graph* g, int64_t t1, int64_t t2,
                             dtg_result** out);
DTG_API dtg_status dtg_certify(const dtg_graph* g, dtg_result** out);
/* approx <= 1 asks for an exact maximum clique. */
DTG_API dtg_status dtg_clique(const dtg_graph* g, int32_t approx, int32_t strict,
                              dtg_result** out);
DTG_API dtg_status dtg_independent_set(const dtg_graph* g, dtg_result** out);
DTG_API dtg_status dtg_coloring(const dtg_graph* g, dtg_result** out);
DTG_API dtg_status dtg_clique_cover(const dtg_graph* g, dtg_result** out);

/* Harness. A failed bound or cross-check returns DTG_ERR_VERIFY with the
 * full report still available in *out. */
DTG_API dtg_status dtg_bench(const char* family, const int32_t* sizes, size_t count,
                             double p, uint64_t seed, dtg_result** out);
DTG_API dtg_status dtg_selftest(int32_t max_n, int32_t random_count, uint64_t seed,
                                dtg_result** out);

/* Re-reads a result document and re-checks it against g. */
DTG_API dtg_status dtg_verify_document(const dtg_graph* g, const char* json_text);

/* Results. Pointers stay valid until dtg_result_destroy. */
DTG_API const char* dtg_result_json(const dtg_result* r);
/* 1 feasible, 0 infeasible, -1 not applicable. */
DTG_API int32_t dtg_result_feasible(const dtg_result* r);
DTG_API dtg_status dtg_result_lambda(const dtg_result* r, int64_t* num, int64_t* den);
DTG_API const int64_t* dtg_result_alpha(const dtg_result* r, size_t* length);
DTG_API size_t dtg_result_set_count(const dtg_result* r);
DTG_API const int32_t* dtg_result_set(const dtg_result* r, size_t index, size_t* length);
DTG_API void dtg_result_destroy(dtg_result* r);

#ifdef __cplusplus
}
#endif

#endif /* DTG_DTG_H_ */
