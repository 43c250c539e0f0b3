// Copyright 2026 The Dihedral Authors
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

/* Exercises the C interface from plain C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "dihedral/dihedral.h"

static int failures = 0;

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

#define OK(call) CHECK((call) == DH_OK)

static void words(void) {
  int valid = -1;
  char* s = NULL;
  OK(dh_word_validate("a b- a", 2, &valid));
  CHECK(valid == 1);
  OK(dh_word_validate("a b a b", 2, &valid));
  CHECK(valid == 0);
  CHECK(dh_word_validate("a x", 2, &valid) == DH_PARSE_ERROR);
  CHECK(strlen(dh_last_error()) > 0);

  OK(dh_word_apply_l("a", 2, &s));
  CHECK(s && strcmp(s, "a- b- a- b a") == 0);
  dh_string_free(s);
  OK(dh_word_invert("a b-", &s));
  CHECK(s && strcmp(s, "b a-") == 0);
  dh_string_free(s);
  CHECK(dh_word_apply_l("", 2, &s) == DH_AMBIGUOUS_OPERATOR);
  OK(dh_word_ar_neighbors("a", 2, &s));
  CHECK(s && strstr(s, "\"has_projective_middle\":false") != NULL);
  dh_string_free(s);
}

static void modules(void) {
  dh_rep* m = NULL;
  dh_rep* d = NULL;
  dh_rep* t = NULL;
  dh_rep* back = NULL;
  size_t dim = 0;
  int q = 0;
  char* s = NULL;
  dh_iso_verdict v = DH_NOT_DECIDED;

  OK(dh_rep_string("a b- a b a-", 2, &m));
  OK(dh_rep_dim(m, &dim));
  CHECK(dim == 6);
  OK(dh_rep_q(m, &q));
  CHECK(q == 2);
  OK(dh_rep_to_json(m, &s));
  CHECK(strstr(s, "\"100000\",\"110000\",\"001000\",\"001100\",\"000011\",\"000001\"") != NULL);
  OK(dh_rep_from_json(s, &back));
  dh_string_free(s);
  OK(dh_rep_isomorphic(m, back, 1, &v));
  CHECK(v == DH_ISOMORPHIC);

  OK(dh_rep_dual(m, &d));
  OK(dh_rep_tensor(m, d, &t));
  OK(dh_rep_dim(t, &dim));
  CHECK(dim == 36);
  OK(dh_rep_decompose(t, 1, 1, 0, &s));
  CHECK(strstr(s, "\"all_certified\":true") != NULL);
  dh_string_free(s);

  OK(dh_rep_signature(m, &s));
  CHECK(strstr(s, "\"signature\"") != NULL);
  dh_string_free(s);
  OK(dh_rep_restrict(m, "x", &s));
  CHECK(strstr(s, "\"free\":3") != NULL);
  dh_string_free(s);

  CHECK(dh_rep_string("a b a b", 2, &d) == DH_INVALID_WORD);
  CHECK(dh_rep_restrict(m, "z", &s) != DH_OK);
  CHECK(dh_rep_dim(NULL, &dim) == DH_INVALID_ARGUMENT);
  CHECK(dh_rep_from_json("{", &d) == DH_PARSE_ERROR);

  dh_rep_free(m);
  dh_rep_free(back);
  dh_rep_free(t);
  dh_rep_free(NULL);
}

static void suites(void) {
  char* s = NULL;
  int passed = -1;
  OK(dh_suite_names(&s));
  CHECK(strstr(s, "omega2") != NULL);
  dh_string_free(s);
  OK(dh_verify("strings", "{\"max_length\":3}", DH_FORMAT_JSON, &s, &passed));
  CHECK(passed == 1);
  dh_string_free(s);
  CHECK(dh_verify("nope", NULL, DH_FORMAT_TEXT, &s, &passed) == DH_UNKNOWN_SUITE);
  OK(dh_quiver_sweep("a b- a", 2, 1, 1, 1, DH_FORMAT_DOT, &s));
  CHECK(strncmp(s, "digraph", 7) == 0);
  dh_string_free(s);
}

int main(void) {
  printf("%s\n", dh_version());
  words();
  modules();
  suites();
  if (failures) {
    fprintf(stderr, "%d checks failed\n", failures);
    return 1;
  }
  printf("ok\n");
  return 0;
}
