/* Copyright 2026 The ordcone Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
/* C interface to libordcone.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns an oc_status; on failure the message of the last error
 * on the calling thread is available from oc_last_error(). Strings returned
 * through char** are heap allocated and released with oc_string_free().
 * Signs are reported as -1 or +1, comparisons as -1 (less), 0, +1 (greater). */

#ifndef ORDCONE_ORDCONE_H
#define ORDCONE_ORDCONE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OC_API __declspec(dllexport)
#else
#define OC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    OC_OK = 0,
    OC_USAGE = 1,    /* malformed or inconsistent input */
    OC_NEGATIVE = 2, /* a declared negative answer, e.g. CommonRoot or NoCone */
    OC_CAP = 3,      /* a class, depth or search cap was exceeded */
    OC_INTERNAL = 4
} oc_status;

typedef struct oc_word oc_word;
typedef struct oc_flag oc_flag;
typedef struct oc_ordering oc_ordering;
typedef struct oc_endo oc_endo;

OC_API const char* oc_version(void);
OC_API const char* oc_last_error(void);
/* Name of the error kind behind the last failure, e.g. "CommonRoot". */
OC_API const char* oc_last_error_kind(void);
OC_API void oc_string_free(char* s);

/* Words of a free group, "x1 x2^-1 x1^3". rank 0 infers it from the text. */
OC_API oc_status oc_word_parse(const char* text, int rank, oc_word** out);
OC_API void oc_word_free(oc_word* w);
OC_API oc_status oc_word_str(const oc_word* w, char** out);
OC_API int oc_word_rank(const oc_word* w);
/* Lower central depth; *depth = 0 when the word lies beyond the cap. */
OC_API oc_status oc_word_depth(const oc_word* w, int cap, int* depth);
/* {"depth": d, "coords": [...]} over the Hall basis. */
OC_API oc_status oc_word_coords_json(const oc_word* w, int cap, char** json);
OC_API oc_status oc_word_magnus(const oc_word* w, int cap, char** text);
OC_API oc_status oc_primitive_root(const oc_word* w, oc_word** root, int64_t* exponent);
/* *found = 0 when g and k share no power; otherwise g^a = k^b. */
OC_API oc_status oc_common_power(const oc_word* g, const oc_word* k, int* found, int64_t* a, int64_t* b);

/* Flag orderings of Z^n. Matrices are "1 0; 0 1", entries may be "p/q". */
OC_API oc_status oc_flag_parse(const char* matrix, oc_flag** out);
OC_API oc_status oc_flag_from_json(const char* json, oc_flag** out);
OC_API oc_status oc_flag_to_json(const oc_flag* f, char** json);
OC_API void oc_flag_free(oc_flag* f);
OC_API oc_status oc_flag_sign(const oc_flag* f, const int64_t* v, size_t n, int* sign);
/* Pullback of f along the integer matrix A. */
OC_API oc_status oc_flag_act(const char* int_matrix, const oc_flag* f, oc_flag** out);
OC_API oc_status oc_gl_witness_json(const char* int_matrix, char** json);
/* count vectors of length dim, stored row after row. */
OC_API oc_status oc_realize_flag(const int64_t* vectors, size_t count, size_t dim, oc_flag** out);
OC_API oc_status oc_classify_cone_json(const int64_t* vectors, size_t count, size_t dim, char** json);

/* Left orderings of free groups. */
OC_API oc_status oc_ordering_identity(int rank, int cls, oc_ordering** out);
OC_API oc_status oc_ordering_from_json(const char* json, oc_ordering** out);
OC_API oc_status oc_ordering_to_json(const oc_ordering* s, char** json);
OC_API oc_status oc_ordering_opposite(const oc_ordering* s, oc_ordering** out);
OC_API void oc_ordering_free(oc_ordering* s);
OC_API oc_status oc_ordering_sign(const oc_ordering* s, const oc_word* w, int* sign);
OC_API oc_status oc_ordering_compare(const oc_ordering* s, const oc_word* g, const oc_word* h, int* cmp);
OC_API oc_status oc_separate(const oc_word* g, const oc_word* k, int c_max, oc_ordering** out);
OC_API oc_status oc_verify_cone_axioms(const oc_ordering* s, int radius, int* passed, char** report_json);
OC_API oc_status oc_ball_distance(const oc_ordering* a, const oc_ordering* b, int r_max, int* radius);

/* Endomorphisms, "x1 -> x1 x2 ; x2 -> x2". */
OC_API oc_status oc_endo_parse(const char* text, int rank, oc_endo** out);
OC_API void oc_endo_free(oc_endo* phi);
OC_API oc_status oc_endo_str(const oc_endo* phi, char** out);
OC_API oc_status oc_endo_apply(const oc_endo* phi, const oc_word* w, oc_word** out);
OC_API oc_status oc_pulled_sign(const oc_endo* phi, const oc_ordering* s, const oc_word* w, int* sign);
OC_API oc_status oc_tm1_witness_json(const oc_endo* phi, int c_max, char** json);
OC_API oc_status oc_boundary_separation(const oc_endo* phi, int radius, oc_word** out);

/* Klein bottle group; elements "x^a y^b", automorphisms "x -> x y ; y -> y". */
OC_API oc_status oc_klein_mul(const char* p, const char* q, char** out);
OC_API oc_status oc_klein_orderings_json(char** json);
OC_API oc_status oc_klein_pull_json(const char* aut, int eps, int delta, char** json);
OC_API oc_status oc_klein_table_json(char** json);
OC_API oc_status oc_klein_local_search_json(int radius, int extend_radius, char** json);

/* Acceptance suite. */
OC_API int oc_acceptance_count(void);
OC_API oc_status oc_acceptance_criterion(int id, uint64_t seed, int* passed, char** json);
OC_API oc_status oc_acceptance_report(uint64_t seed, int* all_passed, char** json);

#ifdef __cplusplus
}
#endif

#endif /* ORDCONE_ORDCONE_H */
