// Copyright 2026 The salv Authors
//
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

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "salv/salv.h"

static int failures = 0;

#define EXPECT(cond)                                                 \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static const char* dihedral =
    "{\"generators\": [\"s\", \"t\"], \"coxeter_matrix\": [[1, 3], [3, 1]], "
    "\"chamber\": {\"preset\": \"interval\"}}";

static const char* affine =
    "{\"generators\": [\"a\", \"b\", \"c\"], \"coxeter_matrix\": [[1, 3, 3], [3, 1, 3], [3, 3, 1]], "
    "\"chamber\": {\"preset\": \"simplex\"}}";

int main(void) {
  salv_arrangement* h = NULL;
  char* out = NULL;
  size_t betti[4] = {0};
  size_t count = 0;
  uint64_t order = 0;

  EXPECT(strcmp(salv_version(), "1.0.0") == 0);
  EXPECT(salv_parse(dihedral, &h) == SALV_OK);
  EXPECT(h != NULL);
  EXPECT(salv_rank(h) == 2);
  EXPECT(salv_group_order(h, &order) == SALV_OK && order == 6);

  EXPECT(salv_validate(h, SALV_FORMAT_TEXT, &out) == SALV_OK);
  EXPECT(out && strncmp(out, "valid\n", 6) == 0);
  salv_string_free(out);

  EXPECT(salv_faces(h, SALV_FORMAT_TEXT, -1, &out) == SALV_OK);
  EXPECT(out && strncmp(out, "faces: 12\n", 10) == 0);
  salv_string_free(out);

  EXPECT(salv_salvetti(h, SALV_FORMAT_DOT, &out) == SALV_OK);
  EXPECT(out && strstr(out, "digraph") == out);
  salv_string_free(out);

  EXPECT(salv_quotient(h, SALV_FORMAT_JSON, &out) == SALV_OK);
  salv_string_free(out);

  EXPECT(salv_homology(h, "complement", SALV_FORMAT_TEXT, -1, &out) == SALV_OK);
  EXPECT(out && strstr(out, "betti: [1, 7]") != NULL);
  salv_string_free(out);

  EXPECT(salv_betti(h, "complement", betti, 4, &count) == SALV_OK);
  EXPECT(count == 2 && betti[0] == 1 && betti[1] == 7);
  EXPECT(salv_betti(h, "quotient", betti, 1, &count) == SALV_OK);
  EXPECT(count == 2 && betti[0] == 1);

  EXPECT(salv_pi1(h, SALV_FORMAT_TEXT, &out) == SALV_OK);
  EXPECT(out && strstr(out, "relations: 0") != NULL);
  salv_string_free(out);

  EXPECT(salv_euler(h, SALV_FORMAT_TEXT, &out) == SALV_OK);
  EXPECT(out && strncmp(out, "euler: -6\n", 10) == 0);
  salv_string_free(out);

  EXPECT(salv_serialize(h, &out) == SALV_OK);
  EXPECT(out && strstr(out, "\"interval\"") != NULL);
  salv_string_free(out);

  EXPECT(salv_pi1(h, SALV_FORMAT_DOT, &out) == SALV_ERR_VALIDATION);
  EXPECT(strstr(salv_last_error(), "dot") != NULL);
  EXPECT(salv_homology(h, "torus", SALV_FORMAT_TEXT, -1, &out) == SALV_ERR_ARGUMENT);
  EXPECT(salv_faces(NULL, SALV_FORMAT_TEXT, -1, &out) == SALV_ERR_ARGUMENT);
  salv_free(h);
  h = NULL;

  EXPECT(salv_parse("{\"generators\": [\"s\"]", &h) == SALV_ERR_VALIDATION);
  EXPECT(h == NULL);
  EXPECT(strstr(salv_last_error(), "ParseError") != NULL);
  EXPECT(salv_load("/nonexistent/spec", &h) == SALV_ERR_VALIDATION);

  EXPECT(salv_parse(affine, &h) == SALV_OK);
  EXPECT(salv_group_order(h, &order) == SALV_ERR_INFEASIBLE);
  EXPECT(salv_salvetti(h, SALV_FORMAT_TEXT, &out) == SALV_ERR_INFEASIBLE);
  EXPECT(strstr(salv_last_error(), "WouldNotTerminate") != NULL);
  EXPECT(salv_betti(h, "quotient", betti, 4, &count) == SALV_OK);
  EXPECT(count == 3 && betti[0] == 1 && betti[1] == 1 && betti[2] == 1);
  salv_free(h);

  EXPECT(salv_check("chamber", 3, 1, SALV_FORMAT_TEXT, &out) == SALV_OK);
  EXPECT(out && strstr(out, "checks passed") != NULL);
  salv_string_free(out);
  EXPECT(salv_check("nothing", 3, 1, SALV_FORMAT_TEXT, &out) == SALV_ERR_ARGUMENT);

  salv_free(NULL);
  salv_string_free(NULL);

  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return EXIT_FAILURE;
  }
  printf("C API: all expectations met\n");
  return EXIT_SUCCESS;
}
