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

#include "ordcone/znord.hpp"
#include "support.hpp"

using namespace ordcone;
using ordcone::testing::kind_of;
using ordcone::testing::Rng;

TEST_CASE("flag_sign is lexicographic through the matrix") {
    CHECK(flag_sign(FlagOrdering::identity(3), IntVector{0, 0, 3}) == Sign::Positive);
    CHECK(flag_sign(FlagOrdering::identity(2), IntVector{-1, 7}) == Sign::Negative);
    CHECK(flag_sign(FlagOrdering::identity(2), IntVector{0, 0}) == Sign::Zero);
    const FlagOrdering swapped(RationalMatrix::from_ints({{0, 1}, {1, 0}}));
    CHECK(flag_sign(swapped, IntVector{5, -1}) == Sign::Negative);
    CHECK(kind_of([&] { flag_sign(swapped, IntVector{1, 2, 3}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("flag construction rejects singular matrices") {
    CHECK(kind_of([] { FlagOrdering(RationalMatrix::from_ints({{1, 2}, {2, 4}})); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([] { IntegerAutomorphism({{2, 0}, {0, 1}}); }) == ErrorKind::InvalidAutomorphism);
}

TEST_CASE("opposite is an involution that flips every sign") {
    const FlagOrdering id = FlagOrdering::identity(2);
    CHECK(opposite(opposite(id)).matrix() == id.matrix());
    CHECK(flag_sign(opposite(id), IntVector{1, 0}) == Sign::Negative);

    Rng rng(5);
    const FlagOrdering f = testing::random_flag(rng, 3);
    for (int t = 0; t < 100; ++t) {
        const IntVector v = testing::random_vector(rng, 3, 9);
        CHECK(flag_sign(opposite(f), v) == negate(flag_sign(f, v)));
    }
}

TEST_CASE("act pulls signs back through the matrix") {
    const FlagOrdering id = FlagOrdering::identity(2);
    CHECK(act(IntegerAutomorphism::identity(2), id) == id);

    const IntegerAutomorphism a({{1, 1}, {0, 1}});
    CHECK(flag_sign(act(a, id), IntVector{0, 1}) == Sign::Positive);
    CHECK(a.apply(IntVector{0, 1}) == IntVector{1, 1});
}

TEST_CASE("act is a right action") {
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
        const IntegerAutomorphism a = testing::random_gl(rng, n);
        const IntegerAutomorphism b = testing::random_gl(rng, n);
        const FlagOrdering f = testing::random_flag(rng, n);
        const FlagOrdering lhs = act(a * b, f);
        const FlagOrdering rhs = act(b, act(a, f));
        for (int s = 0; s < 100; ++s) {
            const IntVector v = testing::random_vector(rng, n, 6);
            CHECK(flag_sign(lhs, v) == flag_sign(rhs, v));
            CHECK(flag_sign(lhs, v) == flag_sign(f, (a * b).apply(v)));
        }
    }
}

TEST_CASE("gl_witness examples") {
    const GlWitness minus = gl_witness(IntegerAutomorphism({{-1, 0}, {0, -1}}));
    CHECK(minus.flag == FlagOrdering::identity(2));
    CHECK(minus.vector == IntVector{1, 0});
    CHECK(minus.before == Sign::Positive);
    CHECK(minus.after == Sign::Negative);

    const GlWitness swap = gl_witness(IntegerAutomorphism({{0, 1}, {1, 0}}));
    CHECK(swap.flag == FlagOrdering::identity(2));
    CHECK(swap.vector == IntVector{1, -1});
    CHECK(swap.before == Sign::Positive);
    CHECK(swap.after == Sign::Negative);

    // The witness vector is normalized so that it starts positive.
    const IntegerAutomorphism shear({{1, 1}, {0, 1}});
    const GlWitness w = gl_witness(shear);
    CHECK(w.flag == FlagOrdering::identity(2));
    CHECK(flag_sign(w.flag, w.vector) == Sign::Positive);
    CHECK(flag_sign(w.flag, shear.apply(w.vector)) == Sign::Negative);

    CHECK(kind_of([] { gl_witness(IntegerAutomorphism::identity(3)); }) == ErrorKind::IsIdentity);
}

TEST_CASE("gl_witness on random automorphisms") {
    Rng rng(99);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
        const IntegerAutomorphism a = testing::random_gl(rng, n);
        if (a.is_identity()) continue;
        const GlWitness w = gl_witness(a);
        CHECK(w.before != w.after);
        CHECK(flag_sign(w.flag, w.vector) == w.before);
        CHECK(flag_sign(w.flag, a.apply(w.vector)) == w.after);
        CHECK(flag_sign(act(a, w.flag), w.vector) == w.after);
    }
}

TEST_CASE("realize_flag examples") {
    const std::vector<IntVector> two{{1, 0}, {-1, 1}};
    const FlagOrdering f = realize_flag(two);
    for (const auto& v : two) CHECK(flag_sign(f, v) == Sign::Positive);

    const std::vector<IntVector> antipodal{{1, 0}, {-1, 0}};
    CHECK(kind_of([&] { realize_flag(antipodal); }) == ErrorKind::NoCone);

    const std::vector<IntVector> single{{2, 1}};
    const FlagOrdering g = realize_flag(single);
    CHECK(flag_sign(g, single[0]) == Sign::Positive);
    CHECK(g.matrix().row(0) == to_rational(IntVector{1, 0}));

    // Positive on a boundary ray only: needs a second level to decide.
    const std::vector<IntVector> boundary{{1, 0}, {0, 1}, {-1, 0}};
    CHECK(kind_of([&] { realize_flag(boundary); }) == ErrorKind::NoCone);
    const std::vector<IntVector> degenerate{{0, 1}, {1, 1}, {-1, 1}};
    const FlagOrdering h = realize_flag(degenerate);
    for (const auto& v : degenerate) CHECK(flag_sign(h, v) == Sign::Positive);
}

TEST_CASE("realize_flag output is verified on random inputs") {
    Rng rng(3);
    int realized = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
        std::vector<IntVector> vs;
        for (int i = 0; i < testing::uniform(rng, 1, 5); ++i) vs.push_back(testing::random_vector(rng, n, 3));
        try {
            const FlagOrdering f = realize_flag(vs);
            ++realized;
            for (const auto& v : vs) CHECK(flag_sign(f, v) == Sign::Positive);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NoCone);
        }
    }
    CHECK(realized > 0);
}

TEST_CASE("semantic equality ignores row scaling and lower row mixing") {
    const FlagOrdering a(RationalMatrix::from_ints({{1, 0}, {0, 1}}));
    const FlagOrdering b(RationalMatrix::from_ints({{3, 0}, {5, 2}}));
    const FlagOrdering c(RationalMatrix::from_ints({{1, 0}, {0, -1}}));
    CHECK(a == b);
    CHECK_FALSE(a == c);
    // Reducing against a row with a negative pivot must keep the order.
    const FlagOrdering d(RationalMatrix::from_ints({{-1, 0}, {1, 1}}));
    const FlagOrdering e(RationalMatrix::from_ints({{-1, 0}, {0, 1}}));
    CHECK(d == e);
    CHECK_FALSE(d == a);
}

TEST_CASE("flag orderings are total, antisymmetric and closed under sums") {
    Rng rng(21);
    for (int t = 0; t < 10; ++t) {
        const FlagOrdering f = testing::random_flag(rng, 3);
        for (int s = 0; s < 100; ++s) {
            const IntVector u = testing::random_vector(rng, 3, 5);
            const IntVector v = testing::random_vector(rng, 3, 5);
            CHECK(flag_sign(f, u) != Sign::Zero);
            IntVector minus = u;
            for (auto& x : minus) x = -x;
            CHECK(flag_sign(f, minus) == negate(flag_sign(f, u)));
            if (flag_sign(f, u) == Sign::Positive && flag_sign(f, v) == Sign::Positive) {
                IntVector sum(3);
                for (std::size_t i = 0; i < 3; ++i) sum[i] = u[i] + v[i];
                CHECK(flag_sign(f, sum) == Sign::Positive);
            }
        }
    }
}
