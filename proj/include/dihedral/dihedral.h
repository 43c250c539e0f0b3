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

#ifndef DIHEDRAL_DIHEDRAL_H_
#define DIHEDRAL_DIHEDRAL_H_

/* C interface to the dihedral module toolkit.
 *
 * Every call returns a dh_status; DH_OK is 0. On failure the message of
 * the last error on the calling thread is available from dh_last_error().
 * Strings returned through char** are heap-allocated and released with
 * dh_string_free(); module handles are released with dh_rep_free().
 *
 * Words use the text form "a b- a" (letters a, b, a-, b-). Matrices, modules
 * and reports are exchanged as JSON text. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DH_API __declspec(dllexport)
#else
#define DH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dh_status {
  DH_OK = 0,
  DH_INVALID_ARGUMENT = 1,
  DH_INVALID_WORD = 2,
  DH_OPERATOR_UNDEFINED = 3,
  DH_AMBIGUOUS_OPERATOR = 4,
  DH_INVALID_BAND = 5,
  DH_NOT_INVERTIBLE = 6,
  DH_UNSUPPORTED_SUBGROUP = 7,
  DH_Q_MISMATCH = 8,
  DH_PRECONDITION_VIOLATED = 9,
  DH_NOT_SIGNATURE_ELIGIBLE = 10,
  DH_CERTIFICATION_FAILED = 11,
  DH_UNREACHABLE = 12,
  DH_UNKNOWN_SUITE = 13,
  DH_PARSE_ERROR = 14,
  DH_INTERNAL = 15
} dh_status;

typedef enum dh_iso_verdict { DH_ISOMORPHIC = 0, DH_NOT_ISOMORPHIC = 1, DH_NOT_DECIDED = 2 } dh_iso_verdict;

typedef enum dh_format { DH_FORMAT_JSON = 0, DH_FORMAT_TEXT = 1, DH_FORMAT_DOT = 2 } dh_format;

typedef struct dh_rep dh_rep;

DH_API const char* dh_version(void);
DH_API const char* dh_status_name(dh_status status);
DH_API const char* dh_last_error(void);
DH_API void dh_string_free(char* s);

/* Words. */
DH_API dh_status dh_word_validate(const char* word, int q, int* valid);
DH_API dh_status dh_word_invert(const char* word, char** out);
DH_API dh_status dh_word_canonical(const char* word, char** out);
DH_API dh_status dh_word_apply_l(const char* word, int q, char** out);
DH_API dh_status dh_word_apply_r(const char* word, int q, char** out);
DH_API dh_status dh_word_omega2(const char* word, int q, char** out);
/* {"left","right","translate","has_projective_middle"} */
DH_API dh_status dh_word_ar_neighbors(const char* word, int q, char** json_out);

/* Module construction and I/O. */
DH_API dh_status dh_rep_trivial(int q, dh_rep** out);
DH_API dh_status dh_rep_string(const char* word, int q, dh_rep** out);
DH_API dh_status dh_rep_band(const char* word, const char* phi_json, int q, dh_rep** out);
DH_API dh_status dh_rep_regular(int q, dh_rep** out);
/* Induction of a Klein four module {"g1","g2"} from "X" or "Y". */
DH_API dh_status dh_rep_induce(const char* klein_json, const char* subgroup, int q, dh_rep** out);
DH_API dh_status dh_rep_from_json(const char* json, dh_rep** out);
DH_API dh_status dh_rep_to_json(const dh_rep* m, char** json_out);
DH_API dh_status dh_rep_clone(const dh_rep* m, dh_rep** out);
DH_API void dh_rep_free(dh_rep* m);
DH_API dh_status dh_rep_dim(const dh_rep* m, size_t* dim);
DH_API dh_status dh_rep_q(const dh_rep* m, int* q);

/* Operations. */
DH_API dh_status dh_rep_dual(const dh_rep* m, dh_rep** out);
DH_API dh_status dh_rep_tensor(const dh_rep* a, const dh_rep* b, dh_rep** out);
DH_API dh_status dh_rep_direct_sum(const dh_rep* a, const dh_rep* b, dh_rep** out);
/* steps < 0: syzygies, steps > 0: cosyzygies, 0: projective-free part. */
DH_API dh_status dh_rep_omega(const dh_rep* m, int steps, dh_rep** out);
/* Subgroup "x", "y" (one involution, {"g"}) or "X", "Y" ({"g1","g2"}). */
DH_API dh_status dh_rep_restrict(const dh_rep* m, const char* subgroup, char** json_out);
/* {"radical": n, "socle": n, "top": n} */
DH_API dh_status dh_rep_radical_socle(const dh_rep* m, char** json_out);

/* Klein four modules as JSON {"g1","g2"}. */
DH_API dh_status dh_klein_decompose(const char* klein_json, char** json_out);
DH_API dh_status dh_klein_omega(const char* klein_json, int steps, char** klein_json_out);
DH_API dh_status dh_rep_klein_decompose(const dh_rep* m, const char* subgroup, char** json_out);

/* Decomposition and invariants. */
DH_API dh_status dh_rep_isomorphic(const dh_rep* a, const dh_rep* b, uint64_t seed, dh_iso_verdict* verdict);
DH_API dh_status dh_rep_decompose(const dh_rep* m, uint64_t seed, int identify, int include_modules,
                                  char** json_out);
DH_API dh_status dh_rep_identify(const dh_rep* m, uint64_t seed, char** json_out);
DH_API dh_status dh_rep_signature(const dh_rep* m, char** json_out);

/* Quiver sweep; format DH_FORMAT_JSON or DH_FORMAT_DOT. */
DH_API dh_status dh_quiver_sweep(const char* word, int q, int radius, uint64_t seed, size_t jobs, dh_format format,
                                 char** out);
DH_API dh_status dh_quiver_vertex(const char* word, int q, int i, int j, dh_rep** out, char** path_json);

/* Tensor closure probe; zero budget fields take the defaults. */
DH_API dh_status dh_algebraic_probe(const dh_rep* seed_module, size_t max_dim, size_t max_classes,
                                    size_t max_rounds, uint64_t seed, size_t jobs, char** json_out);

/* Suites. config_json may be NULL: {"q","max_length","radius","seeds","samples","seed","jobs"}.
 * *passed is set to 1 or 0; format is DH_FORMAT_JSON or DH_FORMAT_TEXT. */
DH_API dh_status dh_suite_names(char** json_out);
DH_API dh_status dh_verify(const char* suite, const char* config_json, dh_format format, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* DIHEDRAL_DIHEDRAL_H_ */
