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

#include <map>
#include <mutex>
#include <shared_mutex>

#include "ordcone/freenil.hpp"

namespace ordcone {

namespace {

std::vector<std::int64_t> concat_product(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out(a.size() * b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

HallBasis::HallBasis(int rank, int cls) : rank_(rank), cls_(cls) {
    if (rank < 1) fail(ErrorKind::RankMismatch, "rank must be positive");
    if (cls < 1 || cls > kMaxClass) fail(ErrorKind::LevelExceedsCap, "class must lie in 1.." + std::to_string(kMaxClass));
    const std::size_t n = static_cast<std::size_t>(rank);

    offsets_.push_back(0);  // weight 1 starts at 0
    for (int g = 1; g <= rank; ++g) {
        elements_.push_back(BasicCommutator{1, g, -1, -1});
        std::vector<std::int64_t> e(n, 0);
        e[static_cast<std::size_t>(g - 1)] = 1;
        expansions_.push_back(std::move(e));
    }
    for (int w = 2; w <= cls; ++w) {
        offsets_.push_back(static_cast<int>(elements_.size()));
        const int known = static_cast<int>(elements_.size());
        for (int a = 0; a < known; ++a) {
            for (int b = a + 1; b < known; ++b) {
                if (elements_[a].weight + elements_[b].weight != w) continue;
                if (elements_[b].weight > 1 && elements_[b].left > a) continue;
                elements_.push_back(BasicCommutator{w, 0, a, b});
                auto ab = concat_product(expansions_[a], expansions_[b]);
                auto ba = concat_product(expansions_[b], expansions_[a]);
                for (std::size_t i = 0; i < ab.size(); ++i) ab[i] -= ba[i];
                expansions_.push_back(std::move(ab));
            }
        }
    }
    offsets_.push_back(static_cast<int>(elements_.size()));

    // Per weight, pick monomials whose rows of the expansion matrix are
    // independent and invert that square block.
    solvers_.resize(static_cast<std::size_t>(cls) + 1);
    for (int w = 1; w <= cls; ++w) {
        const auto [first, last] = weight_range(w);
        const std::size_t r = static_cast<std::size_t>(last - first);
        const std::size_t monomials = expansions_[first].size();
        RationalMatrix transposed(r, monomials);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t m = 0; m < monomials; ++m) transposed(j, m) = static_cast<long>(expansions_[first + j][m]);
        std::vector<std::size_t> pivots;
        rref(transposed, &pivots);
        ensure(pivots.size() == r, "Hall basis expansions are linearly dependent");
        RationalMatrix square(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) square(i, j) = static_cast<long>(expansions_[first + j][pivots[i]]);
        solvers_[w] = Solver{pivots, inverse(square)};
    }
}

std::pair<int, int> HallBasis::weight_range(int w) const {
    if (w < 1 || w > cls_) fail(ErrorKind::LevelExceedsCap, "weight " + std::to_string(w) + " outside the basis class");
    return {offsets_[w - 1], offsets_[w]};
}

int HallBasis::count(int w) const {
    auto [first, last] = weight_range(w);
    return last - first;
}

std::string HallBasis::bracket(int index) const {
    const auto& c = elements_.at(static_cast<std::size_t>(index));
    if (c.weight == 1) return "x" + std::to_string(c.generator);
    return "[" + bracket(c.left) + "," + bracket(c.right) + "]";
}

Word HallBasis::word(int index) const {
    const auto& c = elements_.at(static_cast<std::size_t>(index));
    if (c.weight == 1) return Word::generator(rank_, c.generator);
    return commutator(word(c.left), word(c.right));
}

IntVector HallBasis::coordinates(int w, const std::vector<std::int64_t>& homogeneous) const {
    const auto [first, last] = weight_range(w);
    const auto& solver = solvers_[w];
    const std::size_t r = static_cast<std::size_t>(last - first);
    if (homogeneous.size() != expansions_[first].size()) {
        fail(ErrorKind::DimensionMismatch, "homogeneous part has the wrong number of monomials");
    }
    IntVector coords(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        Rational c = 0;
        for (std::size_t j = 0; j < r; ++j) {
            const std::int64_t x = homogeneous[solver.pivot_rows[j]];
            if (x != 0) c += solver.inverse(i, j) * static_cast<long>(x);
        }
        ensure(c.get_den() == 1 && c.get_num().fits_slong_p(), "Hall coordinates are not integral");
        coords[i] = c.get_num().get_si();
    }
    // The polynomial must be a Lie element: check every monomial.
    for (std::size_t m = 0; m < homogeneous.size(); ++m) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < r; ++i) s += coords[i] * expansions_[first + i][m];
        ensure(s == homogeneous[m], "homogeneous part is not in the span of the Hall basis");
    }
    return coords;
}

std::shared_ptr<const HallBasis> hall_basis(int rank, int cls) {
    static std::shared_mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const HallBasis>> cache;
    const auto key = std::make_pair(rank, cls);
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const HallBasis>(rank, cls);
    std::unique_lock lock(mutex);
    return cache.emplace(key, std::move(built)).first->second;
}

}  // namespace ordcone
