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
// Shared helpers for the unit tests: seeded generators for random inputs.

#ifndef ORDCONE_TESTS_SUPPORT_HPP
#define ORDCONE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <random>

#include <doctest.h>

#include "ordcone/error.hpp"

#include "ordcone/freenil.hpp"
#include "ordcone/znord.hpp"

namespace ordcone::testing {

using Rng = std::mt19937_64;

// Runs f and returns the kind of the ordcone::Error it throws.
inline ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Internal;
}

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Word random_word(Rng& rng, int rank, int length) {
    std::vector<Letter> letters;
    while (static_cast<int>(letters.size()) < length) {
        Letter l = static_cast<Letter>(uniform(rng, 1, rank));
        if (uniform(rng, 0, 1) == 1) l = -l;
        if (!letters.empty() && letters.back() == -l) continue;
        letters.push_back(l);
    }
    return Word(rank, letters);
}

inline IntVector random_vector(Rng& rng, std::size_t n, std::int64_t bound, bool nonzero = true) {
    while (true) {
        IntVector v(n);
        for (auto& x : v) x = uniform(rng, -bound, bound);
        if (!nonzero || std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) return v;
    }
}

inline FlagOrdering random_flag(Rng& rng, std::size_t n, std::int64_t bound = 3) {
    while (true) {
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(random_vector(rng, n, bound, false));
        const RationalMatrix m = RationalMatrix::from_ints(rows);
        if (rank(m) == n) return FlagOrdering(m);
    }
}

inline IntegerAutomorphism random_gl(Rng& rng, std::size_t n, std::int64_t bound = 3) {
    while (true) {
        IntMatrix a;
        for (std::size_t i = 0; i < n; ++i) a.push_back(random_vector(rng, n, bound, false));
        const Rational d = determinant(RationalMatrix::from_ints(a));
        if (d == 1 || d == -1) return IntegerAutomorphism(a);
    }
}

inline Endomorphism random_endomorphism(Rng& rng, int rank, int max_length) {
    std::vector<Word> images;
    for (int g = 0; g < rank; ++g) images.push_back(random_word(rng, rank, static_cast<int>(uniform(rng, 1, max_length))));
    return Endomorphism(rank, images);
}

}  // namespace ordcone::testing

#endif  // ORDCONE_TESTS_SUPPORT_HPP
