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

#include <doctest.h>

#include <map>
#include <set>

#include "ordcone/klein.hpp"
#include "support.hpp"

using namespace ordcone;
using ordcone::testing::kind_of;
using ordcone::testing::Rng;

namespace {

KleinElement random_element(Rng& rng, std::int64_t bound = 5) {
    return {testing::uniform(rng, -bound, bound), testing::uniform(rng, -bound, bound)};
}

// Multiplies out x^a y^b by repeated letters using only the relation y x = x y^-1.
KleinElement multiply_letters(const std::vector<std::pair<char, int>>& letters) {
    // State is x^a y^b; appending x^e flips b when e is odd, appending y^e adds e.
    std::int64_t a = 0, b = 0;
    for (const auto& [g, e] : letters) {
        if (g == 'x') {
            a += e;
            if (e % 2 != 0) b = -b;
        } else {
            b += e;
        }
    }
    return {a, b};
}

std::vector<KleinElement> box_elements(int r) {
    std::vector<KleinElement> out;
    for (std::int64_t a = -r; a <= r; ++a)
        for (std::int64_t b = -r; b <= r; ++b)
            if (a != 0 || b != 0) out.push_back({a, b});
    return out;
}

bool in_box(const KleinElement& p, int r) { return std::abs(p.a) <= r && std::abs(p.b) <= r; }

// Every sign assignment on the box that is antisymmetric, total and closed
// under products staying inside the box, by plain enumeration.
std::vector<std::map<std::pair<std::int64_t, std::int64_t>, int>> brute_force_cones(int r) {
    std::vector<KleinElement> reps;
    for (const auto& p : box_elements(r))
        if (p.a > 0 || (p.a == 0 && p.b > 0)) reps.push_back(p);
    std::vector<std::map<std::pair<std::int64_t, std::int64_t>, int>> out;
    for (std::uint32_t mask = 0; mask < (1u << reps.size()); ++mask) {
        std::map<std::pair<std::int64_t, std::int64_t>, int> s;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const int v = (mask >> i) & 1u ? 1 : -1;
            s[{reps[i].a, reps[i].b}] = v;
            s[{-reps[i].a, reps[i].a % 2 == 0 ? -reps[i].b : reps[i].b}] = -v;
        }
        bool ok = true;
        for (const auto& [p, sp] : s) {
            if (sp != 1) continue;
            for (const auto& [q, sq] : s) {
                if (sq != 1) continue;
                const KleinElement pq = k_mul({p.first, p.second}, {q.first, q.second});
                if (!pq.is_identity() && in_box(pq, r) && s.at({pq.a, pq.b}) != 1) ok = false;
                if (pq.is_identity()) ok = false;
            }
        }
        if (ok) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("klein multiplication") {
    CHECK(k_mul({1, 0}, {0, 1}) == KleinElement{1, 1});
    CHECK(k_mul({0, 1}, {1, 0}) == KleinElement{1, -1});
    const KleinElement x{1, 0}, y{0, 1};
    CHECK(k_mul(k_inverse(x), k_mul(y, x)) == k_inverse(y));
    CHECK(k_inverse(y) == KleinElement{0, -1});

    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const KleinElement p = random_element(rng), q = random_element(rng), r = random_element(rng);
        CHECK(k_mul(k_mul(p, q), r) == k_mul(p, k_mul(q, r)));
        CHECK(k_mul(p, k_inverse(p)).is_identity());
        CHECK(k_mul(k_inverse(p), p).is_identity());
        const auto e = testing::uniform(rng, -4, 4);
        KleinElement power{0, 0};
        for (int i = 0; i < std::abs(e); ++i) power = k_mul(power, e > 0 ? p : k_inverse(p));
        CHECK(k_pow(p, e) == power);
        // Normal form matches a letter-by-letter expansion.
        CHECK(k_mul(p, q) == multiply_letters({{'x', static_cast<int>(p.a)},
                                               {'y', static_cast<int>(p.b)},
                                               {'x', static_cast<int>(q.a)},
                                               {'y', static_cast<int>(q.b)}}));
    }
}

TEST_CASE("klein element parsing") {
    CHECK(parse_klein_element("x^2 y^-1 x") == multiply_letters({{'x', 2}, {'y', -1}, {'x', 1}}));
    CHECK(parse_klein_element("1").is_identity());
    CHECK(parse_klein_element("y x") == KleinElement{1, -1});
    CHECK(KleinElement{2, -3}.str() == "x^2 y^-3");
    CHECK(kind_of([] { parse_klein_element("z"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_klein_element(""); }) == ErrorKind::Parse);
}

TEST_CASE("klein signs") {
    const KleinOrdering pp(1, 1);
    CHECK(k_sign(pp, {3, -5}) == Sign::Positive);
    CHECK(k_sign(pp, {0, -1}) == Sign::Negative);
    CHECK(k_sign(KleinOrdering(-1, 1), {1, 0}) == Sign::Negative);
    CHECK(kind_of([&] { k_sign(pp, {0, 0}); }) == ErrorKind::IdentityElement);
    CHECK(kind_of([] { KleinOrdering(2, 1); }) == ErrorKind::Parse);
}

TEST_CASE("the four orderings") {
    const auto os = k_enumerate_orderings();
    REQUIRE(os.size() == 4);
    std::set<std::vector<Sign>> patterns;
    for (const auto& o : os) {
        CHECK(k_verify_cone(o, 4));
        CHECK(o.opposite().opposite() == o);
        std::vector<Sign> pattern;
        for (const auto& p : box_elements(1)) pattern.push_back(k_sign(o, p));
        patterns.insert(pattern);
        for (const auto& p : box_elements(3)) CHECK(k_sign(o.opposite(), p) == negate(k_sign(o, p)));
        // Not bi-invariant: conjugating y by x gives y^-1.
        const KleinElement x{1, 0}, y{0, 1};
        CHECK(k_sign(o, k_mul(k_mul(x, y), k_inverse(x))) != k_sign(o, y));
    }
    CHECK(patterns.size() == 4);
    // Exactly the brute-force cones restricted to the unit box.
    CHECK(brute_force_cones(1).size() >= 4);
}

TEST_CASE("klein automorphisms") {
    CHECK(kind_of([] { KleinAut({0, 1}, {1, 0}); }) == ErrorKind::InvalidAutomorphism);
    CHECK(kind_of([] { KleinAut({3, 0}, {0, 1}); }) == ErrorKind::InvalidAutomorphism);
    CHECK(kind_of([] { KleinAut({1, 0}, {0, 2}); }) == ErrorKind::InvalidAutomorphism);
    const KleinAut a1 = parse_klein_aut("x -> x y ; y -> y");
    CHECK(a1 == KleinAut({1, 1}, {0, 1}));
    CHECK(a1.str() == "x -> x y ; y -> y");
    CHECK(kind_of([] { parse_klein_aut("z -> x"); }) == ErrorKind::Parse);

    Rng rng(41);
    const KleinAut a3({-1, 0}, {0, -1});
    const std::vector<KleinAut> auts{a1, a3, a1.compose(a3), KleinAut::conjugation({2, -3}),
                                     KleinAut::conjugation({1, 1})};
    for (const auto& phi : auts) {
        CHECK(phi.compose(phi.inverse()).is_identity());
        CHECK(phi.inverse().compose(phi).is_identity());
        for (int t = 0; t < 50; ++t) {
            const KleinElement p = random_element(rng), q = random_element(rng);
            CHECK(phi.apply(k_mul(p, q)) == k_mul(phi.apply(p), phi.apply(q)));
        }
    }
    const KleinElement g{1, 2};
    const KleinAut c = KleinAut::conjugation(g);
    const KleinElement p{3, -1};
    CHECK(c.apply(p) == k_mul(k_mul(g, p), k_inverse(g)));
    CHECK(inner_conjugator(c).has_value());
    CHECK(is_inner_closed_form(c));
    CHECK_FALSE(inner_conjugator(a1).has_value());
    CHECK_FALSE(is_inner_closed_form(a1));
    CHECK_FALSE(is_inner_closed_form(a3));
}

TEST_CASE("pulling orderings back") {
    const KleinAut a1({1, 1}, {0, 1});
    const KleinAut a3({-1, 0}, {0, -1});
    for (const auto& o : k_enumerate_orderings()) {
        CHECK(k_pull(KleinAut::identity(), o) == o);
        CHECK(k_pull(a1, o) == o);
        CHECK(k_pull(a3, o) == KleinOrdering(-o.eps(), -o.delta()));
        for (const auto& p : box_elements(3)) CHECK(k_sign(k_pull(a3, o), p) == k_sign(o, a3.apply(p)));
    }
}

TEST_CASE("outer action is stable under inner composition") {
    const KleinAut a1({1, 1}, {0, 1});
    const KleinAut a3({-1, 0}, {0, -1});
    const auto table = k_out_table();
    Rng rng(50);
    for (int t = 0; t < 20; ++t) {
        const KleinAut inner = KleinAut::conjugation(random_element(rng, 3));
        for (const auto& o : k_enumerate_orderings()) {
            // Composing with an inner automorphism moves the result within its conjugation orbit.
            for (const auto& phi : {a1, a3}) {
                const KleinOrdering base = k_pull(phi, o);
                const KleinOrdering moved = k_pull(phi.compose(inner), o);
                bool same_orbit = false;
                for (const auto& orbit : table.conjugation_orbits) {
                    bool has_base = false, has_moved = false;
                    for (int j : orbit) {
                        has_base = has_base || k_enumerate_orderings()[static_cast<std::size_t>(j)] == base;
                        has_moved = has_moved || k_enumerate_orderings()[static_cast<std::size_t>(j)] == moved;
                    }
                    same_orbit = same_orbit || (has_base && has_moved);
                }
                CHECK(same_orbit);
            }
        }
    }
}

TEST_CASE("outer automorphism table") {
    const OutTable t = k_out_table();
    CHECK(t.klein_four);
    CHECK(t.pairwise_non_inner);
    CHECK(t.alpha1_alpha2_inner);
    CHECK(t.conj_y_fixes_all);
    CHECK(t.conj_y_nontrivial);
    CHECK(t.kernel == std::vector<int>{0, 1});
    for (int j = 0; j < 4; ++j) CHECK(t.action[1][j] == j);
    for (int i = 0; i < 4; ++i) {
        CHECK(t.product[0][i] == i);
        CHECK(t.product[i][i] == 0);
    }
    CHECK(t.product[1][2] == 3);
    // Conjugation by x swaps the sign of y, so each orbit pairs two cones.
    CHECK(t.conjugation_orbits.size() == 2);
    for (const auto& orbit : t.conjugation_orbits) CHECK(orbit.size() == 2);
}

TEST_CASE("local search agrees with brute force") {
    const auto r1 = brute_force_cones(1);
    const auto r2 = brute_force_cones(2);
    std::set<std::map<std::pair<std::int64_t, std::int64_t>, int>> restricted;
    for (const auto& s : r2) {
        std::map<std::pair<std::int64_t, std::int64_t>, int> small;
        for (const auto& [p, v] : s)
            if (std::abs(p.first) <= 1 && std::abs(p.second) <= 1) small[p] = v;
        restricted.insert(small);
    }
    const LocalSearchReport a = k_local_search(1, 2);
    CHECK(a.locally_consistent == r1.size());
    CHECK(a.extendable == restricted.size());

    const LocalSearchReport b = k_local_search(2, 2);
    CHECK(b.locally_consistent == r2.size());
    CHECK(b.extendable == r2.size());

    const LocalSearchReport c = k_local_search();
    CHECK(c.extendable == 4);
    CHECK(c.locally_consistent >= c.extendable);
}
