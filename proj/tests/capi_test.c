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

/* Exercises the shared library through its C interface only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "ordcone/ordcone.h"

static int failures = 0;

#define EXPECT(cond)                                                      \
    do {                                                                  \
        if (!(cond)) {                                                    \
            fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                   \
        }                                                                 \
    } while (0)

static int contains(const char* haystack, const char* needle) {
    return haystack != NULL && strstr(haystack, needle) != NULL;
}

static void test_words(void) {
    oc_word* w = NULL;
    char* text = NULL;
    int depth = 0;
    EXPECT(oc_word_parse("x1 x2 x1^-1 x2^-1", 2, &w) == OC_OK);
    EXPECT(oc_word_rank(w) == 2);
    EXPECT(oc_word_depth(w, 5, &depth) == OC_OK && depth == 2);
    EXPECT(oc_word_str(w, &text) == OC_OK && strcmp(text, "x1 x2 x1^-1 x2^-1") == 0);
    oc_string_free(text);
    EXPECT(oc_word_magnus(w, 2, &text) == OC_OK && contains(text, "X1X2"));
    oc_string_free(text);
    EXPECT(oc_word_depth(w, 1, &depth) == OC_OK && depth == 0);
    EXPECT(oc_word_depth(w, 9, &depth) == OC_CAP);
    oc_word_free(w);

    w = NULL;
    EXPECT(oc_word_parse("x1 ^", 2, &w) == OC_USAGE);
    EXPECT(w == NULL);
    EXPECT(strlen(oc_last_error()) > 0);
    EXPECT(strcmp(oc_last_error_kind(), "ParseError") == 0);

    oc_word* g = NULL;
    oc_word* root = NULL;
    int64_t exponent = 0;
    EXPECT(oc_word_parse("x2^-1 x1^3 x2", 2, &g) == OC_OK);
    EXPECT(oc_primitive_root(g, &root, &exponent) == OC_OK && exponent == 3);
    EXPECT(oc_word_str(root, &text) == OC_OK && strcmp(text, "x2^-1 x1 x2") == 0);
    oc_string_free(text);

    int found = -1;
    int64_t a = 0, b = 0;
    EXPECT(oc_common_power(g, root, &found, &a, &b) == OC_OK && found == 1 && a == 1 && b == 3);
    oc_word_free(root);
    oc_word_free(g);
}

static void test_flags(void) {
    oc_flag* f = NULL;
    oc_flag* acted = NULL;
    int sign = 0;
    const int64_t v[2] = {5, -1};
    char* json = NULL;
    EXPECT(oc_flag_parse("0 1; 1 0", &f) == OC_OK);
    EXPECT(oc_flag_sign(f, v, 2, &sign) == OC_OK && sign == -1);
    EXPECT(oc_flag_sign(f, v, 3, &sign) == OC_USAGE);
    EXPECT(oc_flag_act("1 1; 0 1", f, &acted) == OC_OK);
    oc_flag_free(acted);
    EXPECT(oc_flag_to_json(f, &json) == OC_OK && contains(json, "rows"));
    oc_string_free(json);
    oc_flag_free(f);
    EXPECT(oc_flag_parse("1 2; 2 4", &f) == OC_USAGE);

    EXPECT(oc_gl_witness_json("1 1; 0 1", &json) == OC_OK && contains(json, "vector"));
    oc_string_free(json);
    EXPECT(oc_gl_witness_json("1 0; 0 1", &json) == OC_NEGATIVE);
    EXPECT(strcmp(oc_last_error_kind(), "IsIdentity") == 0);

    const int64_t antipodal[4] = {1, 0, -1, 0};
    EXPECT(oc_realize_flag(antipodal, 2, 2, &f) == OC_NEGATIVE);
    const int64_t pair[4] = {1, 0, -1, 1};
    EXPECT(oc_realize_flag(pair, 2, 2, &f) == OC_OK);
    EXPECT(oc_flag_sign(f, pair + 2, 2, &sign) == OC_OK && sign == 1);
    oc_flag_free(f);
    EXPECT(oc_classify_cone_json(antipodal, 2, 2, &json) == OC_OK && contains(json, "zero"));
    oc_string_free(json);
}

static void test_orderings(void) {
    oc_ordering* s = NULL;
    oc_ordering* t = NULL;
    oc_ordering* sep = NULL;
    oc_word* g = NULL;
    oc_word* k = NULL;
    int sign = 0, cmp = 5, passed = 0, radius = -1;
    char* json = NULL;
    EXPECT(oc_ordering_identity(2, 5, &s) == OC_OK);
    EXPECT(oc_ordering_identity(2, 9, &t) == OC_CAP);
    EXPECT(oc_ordering_opposite(s, &t) == OC_OK);
    EXPECT(oc_word_parse("x1 x2", 2, &g) == OC_OK);
    EXPECT(oc_word_parse("x2 x1", 2, &k) == OC_OK);
    EXPECT(oc_ordering_sign(s, g, &sign) == OC_OK && sign == 1);
    EXPECT(oc_ordering_compare(s, g, g, &cmp) == OC_OK && cmp == 0);
    EXPECT(oc_ball_distance(s, t, 4, &radius) == OC_OK && radius == 0);
    EXPECT(oc_verify_cone_axioms(s, 2, &passed, &json) == OC_OK && passed == 1);
    oc_string_free(json);

    EXPECT(oc_separate(g, k, 5, &sep) == OC_OK);
    EXPECT(oc_ordering_sign(sep, g, &sign) == OC_OK && sign == 1);
    EXPECT(oc_ordering_sign(sep, k, &sign) == OC_OK && sign == -1);
    EXPECT(oc_ordering_to_json(sep, &json) == OC_OK && contains(json, "kernel"));
    oc_ordering* back = NULL;
    EXPECT(oc_ordering_from_json(json, &back) == OC_OK);
    EXPECT(oc_ordering_sign(back, k, &sign) == OC_OK && sign == -1);
    oc_string_free(json);
    oc_ordering_free(back);
    oc_ordering_free(sep);

    oc_word* square = NULL;
    oc_word* x1 = NULL;
    EXPECT(oc_word_parse("x1^2", 2, &square) == OC_OK);
    EXPECT(oc_word_parse("x1", 2, &x1) == OC_OK);
    EXPECT(oc_separate(square, x1, 5, &sep) == OC_NEGATIVE);
    EXPECT(strcmp(oc_last_error_kind(), "CommonRoot") == 0);
    oc_word_free(square);
    oc_word_free(x1);

    oc_word_free(g);
    oc_word_free(k);
    oc_ordering_free(s);
    oc_ordering_free(t);
}

static void test_automorphisms(void) {
    oc_endo* phi = NULL;
    oc_endo* id = NULL;
    oc_word* w = NULL;
    char* json = NULL;
    EXPECT(oc_endo_parse("x1 -> x1 ; x2 -> x1 x2 x1^-1", 2, &phi) == OC_OK);
    EXPECT(oc_tm1_witness_json(phi, 5, &json) == OC_OK && contains(json, "sign_before"));
    oc_string_free(json);
    EXPECT(oc_boundary_separation(phi, 4, &w) == OC_OK);
    char* text = NULL;
    EXPECT(oc_word_str(w, &text) == OC_OK && strcmp(text, "x2") == 0);
    oc_string_free(text);
    oc_word_free(w);
    oc_endo_free(phi);

    EXPECT(oc_endo_parse("x1 -> x1", 2, &id) == OC_OK);
    EXPECT(oc_tm1_witness_json(id, 5, &json) == OC_NEGATIVE);
    EXPECT(strcmp(oc_last_error_kind(), "IdentityAutomorphism") == 0);
    oc_endo_free(id);
    EXPECT(oc_endo_parse("x1 -> x1^2", 2, &phi) == OC_OK);
    EXPECT(oc_tm1_witness_json(phi, 5, &json) == OC_NEGATIVE);
    oc_endo_free(phi);
}

static void test_klein(void) {
    char* out = NULL;
    EXPECT(oc_klein_mul("y", "x", &out) == OC_OK && strcmp(out, "x y^-1") == 0);
    oc_string_free(out);
    EXPECT(oc_klein_pull_json("x -> x^-1 ; y -> y^-1", 1, 1, &out) == OC_OK && contains(out, "-1"));
    oc_string_free(out);
    EXPECT(oc_klein_pull_json("x -> y ; y -> x", 1, 1, &out) == OC_USAGE);
    EXPECT(oc_klein_table_json(&out) == OC_OK && contains(out, "kernel"));
    oc_string_free(out);
    EXPECT(oc_klein_orderings_json(&out) == OC_OK);
    oc_string_free(out);
}

static void test_null_arguments(void) {
    int depth = 0;
    EXPECT(oc_word_parse(NULL, 2, NULL) == OC_USAGE);
    EXPECT(oc_word_depth(NULL, 5, &depth) == OC_USAGE);
    EXPECT(oc_flag_sign(NULL, NULL, 0, NULL) == OC_USAGE);
    EXPECT(oc_separate(NULL, NULL, 5, NULL) == OC_USAGE);
    EXPECT(oc_klein_mul(NULL, "x", NULL) == OC_USAGE);
    oc_word_free(NULL);
    oc_flag_free(NULL);
    oc_ordering_free(NULL);
    oc_endo_free(NULL);
    oc_string_free(NULL);
}

static void test_acceptance(void) {
    int passed = 0;
    char* json = NULL;
    EXPECT(oc_acceptance_count() == 10);
    EXPECT(oc_acceptance_criterion(10, 1, &passed, &json) == OC_OK && passed == 1);
    oc_string_free(json);
    EXPECT(oc_acceptance_criterion(11, 1, &passed, &json) == OC_USAGE);
}

int main(void) {
    EXPECT(strlen(oc_version()) > 0);
    test_words();
    test_flags();
    test_orderings();
    test_automorphisms();
    test_klein();
    test_null_arguments();
    test_acceptance();
    if (failures != 0) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return EXIT_FAILURE;
    }
    printf("all C API checks passed\n");
    return EXIT_SUCCESS;
}
