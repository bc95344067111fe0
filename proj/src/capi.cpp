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

#include "ordcone/ordcone.h"

#include <cstring>
#include <span>

#include "ordcone/acceptance.hpp"
#include "ordcone/autact.hpp"
#include "ordcone/klein.hpp"
#include "ordcone/serialize.hpp"

struct oc_word {
    ordcone::Word value;
};
struct oc_flag {
    ordcone::FlagOrdering value;
};
struct oc_ordering {
    ordcone::LeftOrdering value;
};
struct oc_endo {
    ordcone::Endomorphism value;
};

namespace {

using namespace ordcone;

thread_local std::string g_last_error;
thread_local std::string g_last_kind;

oc_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NoSeparator:
        case ErrorKind::NoCone:
        case ErrorKind::IsIdentity:
        case ErrorKind::CommonRoot:
        case ErrorKind::IdentityAutomorphism:
        case ErrorKind::NonAutomorphism:
        case ErrorKind::NotFoundWithinBall:
            return OC_NEGATIVE;
        case ErrorKind::DepthExceedsCap:
        case ErrorKind::LevelExceedsCap:
        case ErrorKind::DepthCapExceeded:
        case ErrorKind::Overflow:
            return OC_CAP;
        case ErrorKind::Internal:
            return OC_INTERNAL;
        default:
            return OC_USAGE;
    }
}

template <typename F>
oc_status guard(F&& body) {
    g_last_error.clear();
    g_last_kind.clear();
    try {
        body();
        return OC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        g_last_kind = std::string(error_kind_name(e.kind()));
        return status_of(e.kind());
    } catch (const Json::exception& e) {
        g_last_error = std::string("Parse: ") + e.what();
        g_last_kind = "Parse";
        return OC_USAGE;
    } catch (const std::exception& e) {
        g_last_error = std::string("Internal: ") + e.what();
        g_last_kind = "Internal";
        return OC_INTERNAL;
    }
}

void need(const void* p, const char* name) {
    if (p == nullptr) fail(ErrorKind::Parse, std::string(name) + " must not be null");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** out, const std::string& s) {
    need(out, "output");
    *out = dup(s);
}

void put(char** out, const Json& j) { put(out, j.dump()); }

std::vector<IntVector> unpack(const int64_t* vectors, size_t count, size_t dim) {
    if (count == 0) fail(ErrorKind::EmptyInput, "no vectors given");
    need(vectors, "vectors");
    std::vector<IntVector> out;
    for (size_t i = 0; i < count; ++i) out.emplace_back(vectors + i * dim, vectors + (i + 1) * dim);
    return out;
}

int sign_int(Sign s) { return static_cast<int>(s); }

}  // namespace

extern "C" {

const char* oc_version(void) { return "0.1.0"; }
const char* oc_last_error(void) { return g_last_error.c_str(); }
const char* oc_last_error_kind(void) { return g_last_kind.c_str(); }
void oc_string_free(char* s) { std::free(s); }

oc_status oc_word_parse(const char* text, int rank, oc_word** out) {
    return guard([&] {
        need(text, "text");
        need(out, "output");
        *out = new oc_word{parse_word(text, rank)};
    });
}

void oc_word_free(oc_word* w) { delete w; }

oc_status oc_word_str(const oc_word* w, char** out) {
    return guard([&] {
        need(w, "word");
        put(out, w->value.str());
    });
}

int oc_word_rank(const oc_word* w) { return w == nullptr ? 0 : w->value.rank(); }

oc_status oc_word_depth(const oc_word* w, int cap, int* depth) {
    return guard([&] {
        need(w, "word");
        need(depth, "depth");
        if (cap < 1 || cap > kMaxClass) fail(ErrorKind::LevelExceedsCap, "cap must lie in 1.." + std::to_string(kMaxClass));
        *depth = lcs_depth(w->value, cap).value_or(0);
    });
}

oc_status oc_word_coords_json(const oc_word* w, int cap, char** json) {
    return guard([&] {
        need(w, "word");
        if (cap < 1 || cap > kMaxClass) fail(ErrorKind::LevelExceedsCap, "cap must lie in 1.." + std::to_string(kMaxClass));
        const LeadingCoords lc = leading_coords(w->value, cap);
        const auto basis = hall_basis(w->value.rank(), cap);
        Json brackets = Json::array();
        const auto [first, last] = basis->weight_range(lc.depth);
        for (int i = first; i < last; ++i) brackets.push_back(basis->bracket(i));
        put(json, Json{{"depth", lc.depth}, {"coords", lc.coords}, {"basis", std::move(brackets)}});
    });
}

oc_status oc_word_magnus(const oc_word* w, int cap, char** text) {
    return guard([&] {
        need(w, "word");
        if (cap < 1 || cap > kMaxClass) fail(ErrorKind::LevelExceedsCap, "cap must lie in 1.." + std::to_string(kMaxClass));
        put(text, magnus(w->value, cap).str());
    });
}

oc_status oc_primitive_root(const oc_word* w, oc_word** root, int64_t* exponent) {
    return guard([&] {
        need(w, "word");
        need(root, "root");
        need(exponent, "exponent");
        RootDecomposition r = primitive_root(w->value);
        *exponent = r.exponent;
        *root = new oc_word{std::move(r.root)};
    });
}

oc_status oc_common_power(const oc_word* g, const oc_word* k, int* found, int64_t* a, int64_t* b) {
    return guard([&] {
        need(g, "g");
        need(k, "k");
        need(found, "found");
        const auto cp = common_power(g->value, k->value);
        *found = cp ? 1 : 0;
        if (a) *a = cp ? cp->a : 0;
        if (b) *b = cp ? cp->b : 0;
    });
}

oc_status oc_flag_parse(const char* matrix, oc_flag** out) {
    return guard([&] {
        need(matrix, "matrix");
        need(out, "output");
        *out = new oc_flag{FlagOrdering(parse_rational_matrix(matrix))};
    });
}

oc_status oc_flag_from_json(const char* json, oc_flag** out) {
    return guard([&] {
        need(json, "json");
        need(out, "output");
        *out = new oc_flag{flag_from_json(Json::parse(json))};
    });
}

oc_status oc_flag_to_json(const oc_flag* f, char** json) {
    return guard([&] {
        need(f, "flag");
        put(json, to_json(f->value));
    });
}

void oc_flag_free(oc_flag* f) { delete f; }

oc_status oc_flag_sign(const oc_flag* f, const int64_t* v, size_t n, int* sign) {
    return guard([&] {
        need(f, "flag");
        need(v, "vector");
        need(sign, "sign");
        *sign = sign_int(flag_sign(f->value, std::span<const std::int64_t>(v, n)));
    });
}

oc_status oc_flag_act(const char* int_matrix, const oc_flag* f, oc_flag** out) {
    return guard([&] {
        need(int_matrix, "matrix");
        need(f, "flag");
        need(out, "output");
        *out = new oc_flag{act(IntegerAutomorphism(parse_int_matrix(int_matrix)), f->value)};
    });
}

oc_status oc_gl_witness_json(const char* int_matrix, char** json) {
    return guard([&] {
        need(int_matrix, "matrix");
        put(json, to_json(gl_witness(IntegerAutomorphism(parse_int_matrix(int_matrix)))));
    });
}

oc_status oc_realize_flag(const int64_t* vectors, size_t count, size_t dim, oc_flag** out) {
    return guard([&] {
        need(out, "output");
        *out = new oc_flag{realize_flag(unpack(vectors, count, dim))};
    });
}

oc_status oc_classify_cone_json(const int64_t* vectors, size_t count, size_t dim, char** json) {
    return guard([&] {
        std::vector<RationalVector> qs;
        for (const auto& v : unpack(vectors, count, dim)) qs.push_back(to_rational(v));
        put(json, to_json(classify_cone(qs)));
    });
}

oc_status oc_ordering_identity(int rank, int cls, oc_ordering** out) {
    return guard([&] {
        need(out, "output");
        *out = new oc_ordering{StandardOrdering::identity(rank, cls)};
    });
}

oc_status oc_ordering_from_json(const char* json, oc_ordering** out) {
    return guard([&] {
        need(json, "json");
        need(out, "output");
        *out = new oc_ordering{left_from_json(Json::parse(json))};
    });
}

oc_status oc_ordering_to_json(const oc_ordering* s, char** json) {
    return guard([&] {
        need(s, "ordering");
        put(json, to_json(s->value));
    });
}

oc_status oc_ordering_opposite(const oc_ordering* s, oc_ordering** out) {
    return guard([&] {
        need(s, "ordering");
        need(out, "output");
        *out = new oc_ordering{s->value.opposite()};
    });
}

void oc_ordering_free(oc_ordering* s) { delete s; }

oc_status oc_ordering_sign(const oc_ordering* s, const oc_word* w, int* sign) {
    return guard([&] {
        need(s, "ordering");
        need(w, "word");
        need(sign, "sign");
        *sign = sign_int(s->value.sign(w->value));
    });
}

oc_status oc_ordering_compare(const oc_ordering* s, const oc_word* g, const oc_word* h, int* cmp) {
    return guard([&] {
        need(s, "ordering");
        need(g, "g");
        need(h, "h");
        need(cmp, "cmp");
        switch (compare(s->value, g->value, h->value)) {
            case Comparison::Less:
                *cmp = -1;
                break;
            case Comparison::Equal:
                *cmp = 0;
                break;
            case Comparison::Greater:
                *cmp = 1;
                break;
        }
    });
}

oc_status oc_separate(const oc_word* g, const oc_word* k, int c_max, oc_ordering** out) {
    return guard([&] {
        need(g, "g");
        need(k, "k");
        need(out, "output");
        *out = new oc_ordering{separate(g->value, k->value, c_max)};
    });
}

oc_status oc_verify_cone_axioms(const oc_ordering* s, int radius, int* passed, char** report_json) {
    return guard([&] {
        need(s, "ordering");
        need(passed, "passed");
        if (radius < 0) fail(ErrorKind::Parse, "radius must be nonnegative");
        const ConeReport r = verify_cone_axioms(s->value, radius);
        *passed = r.passed ? 1 : 0;
        if (report_json) put(report_json, to_json(r));
    });
}

oc_status oc_ball_distance(const oc_ordering* a, const oc_ordering* b, int r_max, int* radius) {
    return guard([&] {
        need(a, "a");
        need(b, "b");
        need(radius, "radius");
        *radius = ball_distance(a->value, b->value, r_max);
    });
}

oc_status oc_endo_parse(const char* text, int rank, oc_endo** out) {
    return guard([&] {
        need(text, "text");
        need(out, "output");
        *out = new oc_endo{parse_endomorphism(text, rank)};
    });
}

void oc_endo_free(oc_endo* phi) { delete phi; }

oc_status oc_endo_str(const oc_endo* phi, char** out) {
    return guard([&] {
        need(phi, "endomorphism");
        put(out, phi->value.str());
    });
}

oc_status oc_endo_apply(const oc_endo* phi, const oc_word* w, oc_word** out) {
    return guard([&] {
        need(phi, "endomorphism");
        need(w, "word");
        need(out, "output");
        *out = new oc_word{phi->value.apply(w->value)};
    });
}

oc_status oc_pulled_sign(const oc_endo* phi, const oc_ordering* s, const oc_word* w, int* sign) {
    return guard([&] {
        need(phi, "endomorphism");
        need(s, "ordering");
        need(w, "word");
        need(sign, "sign");
        *sign = sign_int(pulled_sign(phi->value, s->value, w->value));
    });
}

oc_status oc_tm1_witness_json(const oc_endo* phi, int c_max, char** json) {
    return guard([&] {
        need(phi, "endomorphism");
        put(json, to_json(tm1_witness(phi->value, c_max)));
    });
}

oc_status oc_boundary_separation(const oc_endo* phi, int radius, oc_word** out) {
    return guard([&] {
        need(phi, "endomorphism");
        need(out, "output");
        *out = new oc_word{boundary_separation(phi->value, radius)};
    });
}

oc_status oc_klein_mul(const char* p, const char* q, char** out) {
    return guard([&] {
        need(p, "p");
        need(q, "q");
        put(out, k_mul(parse_klein_element(p), parse_klein_element(q)).str());
    });
}

oc_status oc_klein_orderings_json(char** json) {
    return guard([&] {
        Json list = Json::array();
        for (const auto& o : k_enumerate_orderings()) list.push_back(to_json(o));
        put(json, list);
    });
}

oc_status oc_klein_pull_json(const char* aut, int eps, int delta, char** json) {
    return guard([&] {
        need(aut, "automorphism");
        put(json, to_json(k_pull(parse_klein_aut(aut), KleinOrdering(eps, delta))));
    });
}

oc_status oc_klein_table_json(char** json) {
    return guard([&] { put(json, to_json(k_out_table())); });
}

oc_status oc_klein_local_search_json(int radius, int extend_radius, char** json) {
    return guard([&] {
        if (radius < 1 || extend_radius < radius || extend_radius > 6) {
            fail(ErrorKind::Parse, "need 1 <= radius <= extend_radius <= 6");
        }
        const LocalSearchReport r = k_local_search(radius, extend_radius);
        put(json, Json{{"radius", r.radius},
                       {"extend_radius", r.extend_radius},
                       {"locally_consistent", r.locally_consistent},
                       {"extendable", r.extendable}});
    });
}

int oc_acceptance_count(void) { return 10; }

oc_status oc_acceptance_criterion(int id, uint64_t seed, int* passed, char** json) {
    return guard([&] {
        need(passed, "passed");
        const CriterionResult r = run_criterion(id, seed);
        *passed = r.passed ? 1 : 0;
        Json j = to_json(r);
        j["line"] = format_line(r);
        put(json, j);
    });
}

oc_status oc_acceptance_report(uint64_t seed, int* all_passed, char** json) {
    return guard([&] {
        need(all_passed, "all_passed");
        Json criteria = Json::array();
        bool ok = true;
        for (const auto& r : run_acceptance(seed)) {
            ok = ok && r.passed;
            Json j = to_json(r);
            j["line"] = format_line(r);
            criteria.push_back(std::move(j));
        }
        *all_passed = ok ? 1 : 0;
        put(json, Json{{"seed", seed}, {"passed", ok}, {"criteria", std::move(criteria)}});
    });
}

}  // extern "C"
