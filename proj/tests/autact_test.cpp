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

#include "oracles.hpp"
#include "ordcone/acceptance.hpp"
#include "ordcone/autact.hpp"
#include "ordcone/roots.hpp"
#include "support.hpp"

using namespace ordcone;
using ordcone::testing::kind_of;
using ordcone::testing::Rng;

namespace {

Word w2(std::string_view text) { return parse_word(text, 2); }
Endomorphism e2(std::string_view text) { return parse_endomorphism(text, 2); }

}  // namespace

TEST_CASE("pulled signs") {
    const LeftOrdering s = StandardOrdering::identity(2);
    for (const auto& w : ball(2, 3)) CHECK(pulled_sign(Endomorphism::identity(2), s, w) == s.sign(w));
    CHECK(pulled_sign(e2("x1 -> x1 x2"), s, w2("x1")) == Sign::Positive);
    CHECK(kind_of([&] { pulled_sign(e2("x1 -> 1"), s, w2("x1")); }) == ErrorKind::EmptyWord);

    Rng rng(10);
    for (int t = 0; t < 100; ++t) {
        const Endomorphism phi = testing::random_endomorphism(rng, 2, 2);
        const Endomorphism psi = testing::random_endomorphism(rng, 2, 2);
        const Word w = testing::random_word(rng, 2, 2);
        const Word image = compose(phi, psi).apply(w);
        if (image.empty() || !lcs_depth(image, 5)) continue;
        CHECK(pulled_sign(compose(phi, psi), s, w) == pulled_sign(phi, s, psi.apply(w)));
    }
}

TEST_CASE("tm1 witness examples") {
    const Endomorphism shear = e2("x1 -> x1 x2 ; x2 -> x2");
    const OrderingWitness a = tm1_witness(shear);
    CHECK(a.ordering().is_standard());
    CHECK(a.sign_before() != a.sign_after());
    CHECK(a.ordering().sign(a.word()) == a.sign_before());
    CHECK(a.ordering().sign(shear.apply(a.word())) == a.sign_after());

    const Endomorphism conj = e2("x1 -> x1 ; x2 -> x1 x2 x1^-1");
    const OrderingWitness b = tm1_witness(conj);
    CHECK(b.word() == w2("x2"));
    CHECK(b.ordering().sign(w2("x2")) == Sign::Positive);
    CHECK(b.ordering().sign(w2("x1 x2 x1^-1")) == Sign::Negative);

    CHECK(kind_of([] { tm1_witness(Endomorphism::identity(2)); }) == ErrorKind::IdentityAutomorphism);
    CHECK(kind_of([] { tm1_witness(e2("x1 -> x1^2")); }) == ErrorKind::NonAutomorphism);
    CHECK(kind_of([] { tm1_witness(e2("x1 -> x2 ; x2 -> x2")); }) == ErrorKind::NonAutomorphism);
    // Determinant one but not surjective: the two images form a Nielsen-reduced
    // basis of a proper subgroup.
    CHECK(kind_of([] { tm1_witness(e2("x1 -> x1 ; x2 -> x2 x1 x2 x1^-1 x2^-1")); }) == ErrorKind::NonAutomorphism);
}

TEST_CASE("witnesses for the whole catalog") {
    const auto catalog = automorphism_catalog();
    CHECK(catalog.size() >= 20);
    for (const auto& entry : catalog) {
        INFO(entry.name);
        const OrderingWitness w = tm1_witness(entry.phi);
        CHECK(w.sign_before() != w.sign_after());
        CHECK(pulled_sign(entry.phi, w.ordering(), w.word()) == w.sign_after());
        CHECK(w.ordering().sign(w.word()) == w.sign_before());
    }
}

TEST_CASE("automorphism inverses") {
    for (const auto& entry : automorphism_catalog()) {
        INFO(entry.name);
        const Endomorphism inv = automorphism_inverse(entry.phi);
        CHECK(compose(entry.phi, inv).is_identity());
        CHECK(compose(inv, entry.phi).is_identity());
    }
    CHECK(kind_of([] { automorphism_inverse(e2("x1 -> x1 x2 x1 ; x2 -> x2")); }) == ErrorKind::NonAutomorphism);
}

TEST_CASE("primitive roots") {
    const RootDecomposition a = primitive_root(w2("x1 x2 x1 x2 x1 x2"));
    CHECK(a.root == w2("x1 x2"));
    CHECK(a.exponent == 3);
    const RootDecomposition b = primitive_root(w2("x1 x2"));
    CHECK(b.root == w2("x1 x2"));
    CHECK(b.exponent == 1);
    const RootDecomposition c = primitive_root(w2("x2^-1 x1^3 x2"));
    CHECK(c.root == w2("x2^-1 x1 x2"));
    CHECK(c.exponent == 3);
    CHECK(kind_of([] { primitive_root(Word(2)); }) == ErrorKind::EmptyWord);

    Rng rng(15);
    for (int t = 0; t < 100; ++t) {
        const Word w = testing::random_word(rng, 2, static_cast<int>(testing::uniform(rng, 1, 5)));
        const int n = static_cast<int>(testing::uniform(rng, 1, 4));
        const RootDecomposition r = primitive_root(w.pow(n));
        CHECK(r.root.pow(r.exponent) == w.pow(n));
        CHECK(r.exponent % n == 0);
        CHECK(primitive_root(r.root).exponent == 1);
    }
}

TEST_CASE("common powers") {
    const auto a = common_power(w2("x1^2"), w2("x1^3"));
    REQUIRE(a.has_value());
    CHECK(a->a == 3);
    CHECK(a->b == 2);
    CHECK_FALSE(common_power(w2("x1"), w2("x2")).has_value());
    const auto c = common_power(w2("x1 x2 x1 x2"), w2("x1 x2"));
    REQUIRE(c.has_value());
    CHECK(c->a == 1);
    CHECK(c->b == 2);
    CHECK_FALSE(common_power(w2("x1"), w2("x1^-1")).has_value());

    const auto words = ball(2, 2);
    for (const auto& g : words)
        for (const auto& k : words) {
            const auto cp = common_power(g, k);
            CHECK(cp.has_value() == oracle::small_common_power(g, k, 4).has_value());
            CHECK(cp.has_value() == common_power(k, g).has_value());
            if (cp) CHECK(g.pow(cp->a) == k.pow(cp->b));
        }
    CHECK(common_power(w2("x1 x2^-1"), w2("x1 x2^-1")).value().a == 1);
}

TEST_CASE("boundary separation") {
    const Endomorphism shear = e2("x1 -> x1 x2 ; x2 -> x2");
    const Word g = boundary_separation(shear);
    CHECK(g == w2("x1"));
    CHECK_FALSE(common_power(g, shear.apply(g)).has_value());

    const Endomorphism conj = e2("x1 -> x1 ; x2 -> x1 x2 x1^-1");
    const Word h = boundary_separation(conj);
    CHECK(h == w2("x2"));
    CHECK_FALSE(common_power(h, conj.apply(h)).has_value());

    CHECK(kind_of([] { boundary_separation(Endomorphism::identity(2)); }) == ErrorKind::IdentityAutomorphism);

    for (const auto& entry : automorphism_catalog()) {
        INFO(entry.name);
        const Word w = boundary_separation(entry.phi);
        CHECK_FALSE(oracle::small_common_power(w, entry.phi.apply(w), 6).has_value());
    }
}
