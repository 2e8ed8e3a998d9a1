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


/* Exercises the C interface from plain C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "dtg/dtg.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static void test_graph_lifecycle(void) {
  const int32_t edges[] = {0, 1, 1, 2};
  dtg_graph* g = NULL;
  EXPECT(dtg_graph_create(3, edges, 2, &g) == DTG_OK);
  EXPECT(dtg_graph_vertex_count(g) == 3);
  EXPECT(dtg_graph_edge_count(g) == 2);
  char* text = NULL;
  EXPECT(dtg_graph_emit(g, &text) == DTG_OK);
  EXPECT(text && strcmp(text, "3 2\n0 1\n1 2\n") == 0);
  dtg_string_free(text);
  dtg_graph_destroy(g);

  const int32_t loop[] = {0, 1, 1, 0};
  g = NULL;
  EXPECT(dtg_graph_create(2, loop, 2, &g) == DTG_ERR_CYCLE);
  EXPECT(g == NULL);
  EXPECT(strlen(dtg_last_error()) > 0);
  EXPECT(dtg_graph_parse("2 1\n0 0\n", &g) == DTG_ERR_SELF_LOOP);
  EXPECT(strstr(dtg_last_error(), "line 2") != NULL);
  EXPECT(dtg_graph_create(2, NULL, 1, &g) == DTG_ERR_INVALID_ARGUMENT);
  EXPECT(dtg_graph_generate("nope", 3, 0.5, 1, &g) == DTG_ERR_BAD_PARAMS);
  EXPECT(strcmp(dtg_status_name(DTG_INFEASIBLE), "infeasible") == 0);
  EXPECT(strlen(dtg_version()) > 0);
}

static void test_check(void) {
  dtg_graph* g = NULL;
  EXPECT(dtg_graph_parse("3 2\n0 1\n1 2\n", &g) == DTG_OK);

  dtg_result* r = NULL;
  EXPECT(dtg_check(g, 1, 2, &r) == DTG_OK);
  EXPECT(dtg_result_feasible(r) == 1);
  size_t len = 0;
  const int64_t* alpha = dtg_result_alpha(r, &len);
  EXPECT(len == 3 && alpha[0] == -2 && alpha[1] == -1 && alpha[2] == 0);
  EXPECT(dtg_verify_document(g, dtg_result_json(r)) == DTG_OK);
  dtg_result_destroy(r);

  r = NULL;
  EXPECT(dtg_check(g, 1, 1, &r) == DTG_INFEASIBLE);
  EXPECT(dtg_result_feasible(r) == 0);
  EXPECT(strstr(dtg_result_json(r), "\"hop\"") != NULL);
  EXPECT(dtg_verify_document(g, dtg_result_json(r)) == DTG_OK);
  dtg_result_destroy(r);

  r = NULL;
  EXPECT(dtg_check(g, 2, 1, &r) == DTG_ERR_INVALID_THRESHOLDS);
  dtg_graph_destroy(g);
}

static void test_lambda_and_certify(void) {
  dtg_graph* g = NULL;
  EXPECT(dtg_graph_generate("path", 6, 0.0, 1, &g) == DTG_OK);
  dtg_result* r = NULL;
  EXPECT(dtg_lambda(g, &r) == DTG_OK);
  int64_t num = 0, den = 0;
  EXPECT(dtg_result_lambda(r, &num, &den) == DTG_OK);
  EXPECT(num == 5 && den == 1);
  EXPECT(dtg_result_feasible(r) == -1);
  dtg_result_destroy(r);

  r = NULL;
  EXPECT(dtg_certify(g, &r) == DTG_OK);
  EXPECT(dtg_verify_document(g, dtg_result_json(r)) == DTG_OK);
  dtg_result_destroy(r);

  dtg_graph* other = NULL;
  EXPECT(dtg_graph_generate("path", 5, 0.0, 1, &other) == DTG_OK);
  r = NULL;
  EXPECT(dtg_certify(g, &r) == DTG_OK);
  EXPECT(dtg_verify_document(other, dtg_result_json(r)) == DTG_ERR_VERIFY);
  EXPECT(dtg_verify_document(g, "{not json") == DTG_ERR_PARSE);
  dtg_result_destroy(r);
  dtg_graph_destroy(other);
  dtg_graph_destroy(g);

  g = NULL;
  EXPECT(dtg_graph_generate("edgeless", 4, 0.0, 1, &g) == DTG_OK);
  r = NULL;
  EXPECT(dtg_certify(g, &r) == DTG_ERR_DEGENERATE);
  dtg_graph_destroy(g);
}

static void test_solutions(void) {
  dtg_graph* g = NULL;
  EXPECT(dtg_graph_generate("tournament", 4, 0.0, 1, &g) == DTG_OK);
  dtg_result* r = NULL;
  EXPECT(dtg_clique(g, 1, 0, &r) == DTG_OK);
  EXPECT(dtg_result_set_count(r) == 1);
  size_t len = 0;
  EXPECT(dtg_result_set(r, 0, &len) != NULL && len == 4);
  EXPECT(dtg_result_set(r, 5, &len) == NULL && len == 0);
  dtg_result_destroy(r);

  r = NULL;
  EXPECT(dtg_clique(g, 3, 0, &r) == DTG_ERR_INVALID_FACTOR);

  r = NULL;
  EXPECT(dtg_coloring(g, &r) == DTG_OK);
  EXPECT(dtg_result_set_count(r) == 4);
  dtg_result_destroy(r);

  r = NULL;
  EXPECT(dtg_independent_set(g, &r) == DTG_OK);
  EXPECT(dtg_result_set_count(r) == 1);
  dtg_result_destroy(r);

  r = NULL;
  EXPECT(dtg_clique_cover(g, &r) == DTG_OK);
  EXPECT(dtg_result_set_count(r) == 1);
  dtg_result_destroy(r);
  dtg_graph_destroy(g);
}

static void test_harness(void) {
  const int32_t sizes[] = {20, 40};
  dtg_result* r = NULL;
  EXPECT(dtg_bench("random", sizes, 2, 0.3, 9, &r) == DTG_OK);
  EXPECT(strstr(dtg_result_json(r), "\"bounds_ok\": true") != NULL);
  dtg_result_destroy(r);

  r = NULL;
  EXPECT(dtg_selftest(5, 20, 1, &r) == DTG_OK);
  EXPECT(strstr(dtg_result_json(r), "\"ok\": true") != NULL);
  dtg_result_destroy(r);

  r = NULL;
  EXPECT(dtg_selftest(0, 1, 1, &r) == DTG_ERR_BAD_PARAMS);

  int64_t t1 = 0, t2 = 0;
  EXPECT(dtg_parse_thresholds("1/2", "3/4", &t1, &t2) == DTG_OK);
  EXPECT(t1 == 2 && t2 == 3);
}

int main(void) {
  test_graph_lifecycle();
  test_check();
  test_lambda_and_certify();
  test_solutions();
  test_harness();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return EXIT_FAILURE;
  }
  puts("c api: all checks passed");
  return EXIT_SUCCESS;
}
