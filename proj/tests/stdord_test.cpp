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

#include "ordcone/roots.hpp"
#include "ordcone/stdord.hpp"
#include "support.hpp"

using namespace ordcone;
using ordcone::testing::kind_of;
using ordcone::testing::Rng;

namespace {

Word w2(std::string_view text) { return parse_word(text, 2); }

std::vector<FlagOrdering> identity_levels(int rank, int from, int to) {
    std::vector<FlagOrdering> out;
    const auto h = hall_basis(rank, kMaxClass);
    for (int i = from; i <= to; ++i) out.push_back(FlagOrdering::identity(static_cast<std::size_t>(h->count(i))));
    return out;
}

StandardOrdering random_standard(Rng& rng, int rank, int cls) {
    std::vector<FlagOrdering> levels;
    const auto h = hall_basis(rank, cls);
    for (int i = 1; i <= cls; ++i) levels.push_back(testing::random_flag(rng, static_cast<std::size_t>(h->count(i)), 2));
    return StandardOrdering(rank, cls, levels);
}

// Products of positives stay positive, checked pair by pair on a ball.
bool closed_on_ball(const LeftOrdering& s, int radius) {
    const auto words = ball(s.rank(), radius);
    std::vector<Word> positives;
    for (const auto& w : words)
        if (s.sign(w) == Sign::Positive) positives.push_back(w);
    for (const auto& u : positives)
        for (const auto& v : positives)
            if (s.sign(u * v) != Sign::Positive) return false;
    return positives.size() * 2 == words.size();
}

}  // namespace

TEST_CASE("standard signs for identity flags") {
    const StandardOrdering s = StandardOrdering::identity(2);
    CHECK(std_sign(s, w2("x1")) == Sign::Positive);
    CHECK(std_sign(s, w2("x1^-1 x2")) == Sign::Negative);
    CHECK(std_sign(s, commutator(w2("x1"), w2("x2"))) == Sign::Positive);
    CHECK(std_sign(s, commutator(w2("x2"), w2("x1"))) == Sign::Negative);
    CHECK(kind_of([&] { std_sign(s, Word(2)); }) == ErrorKind::EmptyWord);
    const StandardOrdering shallow = StandardOrdering::identity(2, 1);
    CHECK(kind_of([&] { std_sign(shallow, commutator(w2("x1"), w2("x2"))); }) == ErrorKind::DepthExceedsCap);
}

TEST_CASE("standard ordering construction is validated") {
    CHECK(kind_of([] { StandardOrdering(2, 2, identity_levels(2, 1, 1)); }) == ErrorKind::DimensionMismatch);
    std::vector<FlagOrdering> wrong{FlagOrdering::identity(2), FlagOrdering::identity(2)};
    CHECK(kind_of([&] { StandardOrdering(2, 2, wrong); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([] { StandardOrdering::identity(2, 8); }) == ErrorKind::LevelExceedsCap);
}

TEST_CASE("compare") {
    const LeftOrdering s = StandardOrdering::identity(2);
    CHECK(compare(s, w2("x1 x2"), w2("x1 x2")) == Comparison::Equal);
    CHECK(compare(s, w2("x1"), w2("x1 x2")) == Comparison::Less);
    Rng rng(6);
    for (int t = 0; t < 100; ++t) {
        const Word g = testing::random_word(rng, 2, 4);
        const Word h = testing::random_word(rng, 2, 4);
        const Comparison a = compare(s, g, h);
        const Comparison b = compare(s, h, g);
        if (a == Comparison::Equal) {
            CHECK(b == Comparison::Equal);
        } else {
            CHECK(a != b);
            CHECK(b != Comparison::Equal);
        }
    }
}

TEST_CASE("pullback") {
    const StandardOrdering direct = StandardOrdering::identity(2);
    CHECK(pullback(2, identity_levels(2, 1, 2), identity_levels(2, 3, 5)) == direct);

    Rng rng(13);
    auto tail_a = identity_levels(2, 2, 5);
    auto tail_b = tail_a;
    tail_b[0] = tail_b[0].opposite();
    tail_b[2] = testing::random_flag(rng, 3, 2);
    const StandardOrdering a = pullback(2, identity_levels(2, 1, 1), tail_a);
    const StandardOrdering b = pullback(2, identity_levels(2, 1, 1), tail_b);
    for (const auto& w : ball(2, 3))
        if (lcs_depth(w, 5) == 1) CHECK(std_sign(a, w) == std_sign(b, w));
    const Word c = commutator(w2("x1"), w2("x2"));
    CHECK(std_sign(a, c) != std_sign(b, c));

    CHECK(kind_of([] { pullback(2, identity_levels(2, 1, 1), identity_levels(2, 3, 4)); }) ==
          ErrorKind::DimensionMismatch);
}

TEST_CASE("cone axioms for identity and random standard orderings") {
    const ConeReport r = verify_cone_axioms(StandardOrdering::identity(2), 3);
    CHECK(r.passed);
    CHECK(r.totality);
    CHECK(r.antisymmetry);
    CHECK(r.closure);
    CHECK(r.conjugation);
    CHECK(r.words == 52);

    Rng rng(8);
    for (int t = 0; t < 3; ++t) {
        const StandardOrdering s = random_standard(rng, 2, 5);
        CHECK(verify_cone_axioms(s, 3).passed);
        CHECK(closed_on_ball(s, 3));
        for (const auto& w : ball(2, 3))
            for (int g = 1; g <= 2; ++g) {
                const Word x = Word::generator(2, g);
                CHECK(std_sign(s, x * w * x.inverse()) == std_sign(s, w));
            }
    }
}

TEST_CASE("opposite flips every sign") {
    Rng rng(9);
    const StandardOrdering s = random_standard(rng, 2, 5);
    for (const auto& w : ball(2, 3)) CHECK(std_sign(s.opposite(), w) == negate(std_sign(s, w)));
}

TEST_CASE("ball distance") {
    const LeftOrdering s = StandardOrdering::identity(2);
    CHECK(ball_distance(s, s, 4) == 4);
    CHECK(ball_distance(s, s.opposite(), 4) == 0);

    auto levels = identity_levels(2, 1, 5);
    levels[2] = levels[2].opposite();
    const LeftOrdering t = StandardOrdering(2, 5, levels);
    // Only words of lower central depth exactly 3 can tell the two apart, so the
    // agreement radius is one less than the length of the shortest such word.
    int shortest = 0;
    for (int r = 1; r <= 8 && shortest == 0; ++r)
        for (const auto& w : ball(2, r))
            if (static_cast<int>(w.size()) == r && lcs_depth(w, 5) == 3) {
                shortest = r;
                break;
            }
    REQUIRE(shortest > 0);
    CHECK(ball_distance(s, t, 8) == shortest - 1);
    CHECK(ball_distance(s, t, shortest - 2) == shortest - 2);
}

TEST_CASE("separate examples") {
    const LeftOrdering a = separate(w2("x1"), w2("x2"));
    REQUIRE(a.is_standard());
    CHECK(a.sign(w2("x1")) == Sign::Positive);
    CHECK(a.sign(w2("x2")) == Sign::Negative);
    const RationalVector& row = a.standard().level(1).matrix().row(0);
    CHECK(row[0] > 0);
    CHECK(row[1] < 0);

    CHECK(kind_of([] { separate(w2("x1^2"), w2("x1")); }) == ErrorKind::CommonRoot);

    // x1 x2 and x2 x1 are conjugate, so no bi-invariant ordering separates them.
    const LeftOrdering b = separate(w2("x1 x2"), w2("x2 x1"));
    CHECK(lcs_depth(w2("x1 x2") * w2("x2 x1").inverse(), 5) == 2);
    CHECK_FALSE(b.is_standard());
    CHECK(b.sign(w2("x1 x2")) == Sign::Positive);
    CHECK(b.sign(w2("x2 x1")) == Sign::Negative);
    CHECK(b.opposite().sign(w2("x1 x2")) == Sign::Negative);

    CHECK(kind_of([] { separate(Word(2), w2("x1")); }) == ErrorKind::EmptyWord);
}

TEST_CASE("separate on the radius-2 ball") {
    const auto words = ball(2, 2);
    std::size_t kernel = 0;
    for (const auto& g : words)
        for (const auto& k : words) {
            if (g == k) continue;
            const bool same_root = primitive_root(g).root == primitive_root(k).root;
            try {
                const LeftOrdering s = separate(g, k);
                CHECK_FALSE(same_root);
                CHECK(s.sign(g) == Sign::Positive);
                CHECK(s.sign(k) == Sign::Negative);
                if (!s.is_standard()) ++kernel;
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::CommonRoot);
                CHECK(same_root);
            }
        }
    CHECK(kernel > 0);
}

TEST_CASE("kernel orderings are left orderings") {
    std::vector<LeftOrdering> found;
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"x1 x2", "x2 x1"}, {"x2", "x1 x2 x1^-1"}, {"x1 x2^-1", "x2^-1 x1"}, {"x1^2 x2", "x2 x1^2"}};
    for (const auto& [g, k] : pairs) {
        const LeftOrdering s = separate(w2(g), w2(k));
        REQUIRE_FALSE(s.is_standard());
        found.push_back(s);
    }
    for (const auto& s : found) {
        const ConeReport r = verify_cone_axioms(s, 3);
        CHECK(r.passed);
        CHECK_FALSE(r.conjugation_required);
        CHECK(closed_on_ball(s, 3));
        CHECK(closed_on_ball(s.opposite(), 3));
    }
}

TEST_CASE("fox vectors") {
    const IntMatrix psi{{1, 0}};
    const FoxVector x2 = fox_vector(w2("x2"), psi);
    REQUIRE(x2.size() == 1);
    CHECK(x2.begin()->first.generator == 2);
    CHECK(x2.begin()->second == 1);
    // Commutators of elements of the kernel have vanishing Fox vector.
    const Word u = w2("x2");
    const Word v = w2("x1 x2 x1^-1");
    CHECK(fox_vector(commutator(u, v), psi).empty());
    CHECK(fox_vector(commutator(w2("x2^2"), w2("x1^-1 x2 x1")), psi).empty());
    // Additive on the kernel.
    FoxVector sum = fox_vector(u, psi);
    for (const auto& [key, c] : fox_vector(v, psi)) sum[key] += c;
    CHECK(fox_vector(u * v, psi) == sum);
}
