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

#include <cstdlib>
#include <sstream>

#include "ordcone/freenil.hpp"

namespace ordcone {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "Magnus coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "Magnus coefficient overflow");
    return r;
}

std::size_t ipow(std::size_t base, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void check_cap(int cap) {
    if (cap < 1 || cap > kMaxClass) {
        fail(ErrorKind::LevelExceedsCap, "degree cap must lie in 1.." + std::to_string(kMaxClass));
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int rank, int cap) : rank_(rank), cap_(cap) {
    if (rank < 1) fail(ErrorKind::RankMismatch, "rank must be positive");
    check_cap(cap);
    terms_.resize(static_cast<std::size_t>(cap) + 1);
    for (int k = 0; k <= cap; ++k) terms_[k].assign(ipow(static_cast<std::size_t>(rank), k), 0);
}

TruncatedSeries TruncatedSeries::one(int rank, int cap) {
    TruncatedSeries s(rank, cap);
    s.terms_[0][0] = 1;
    return s;
}

std::int64_t TruncatedSeries::coefficient(const std::vector<int>& monomial) const {
    if (monomial.size() > static_cast<std::size_t>(cap_)) return 0;
    std::size_t idx = 0;
    for (int g : monomial) {
        if (g < 1 || g > rank_) fail(ErrorKind::RankMismatch, "monomial letter outside rank");
        idx = idx * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(g - 1);
    }
    return terms_[monomial.size()][idx];
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    if (rank_ != rhs.rank_ || cap_ != rhs.cap_) fail(ErrorKind::RankMismatch, "series of different shape");
    TruncatedSeries out(rank_, cap_);
    for (int i = 0; i <= cap_; ++i) {
        for (int j = 0; i + j <= cap_; ++j) {
            const std::size_t width = rhs.terms_[j].size();
            for (std::size_t a = 0; a < terms_[i].size(); ++a) {
                const std::int64_t x = terms_[i][a];
                if (x == 0) continue;
                for (std::size_t b = 0; b < width; ++b) {
                    const std::int64_t y = rhs.terms_[j][b];
                    if (y == 0) continue;
                    auto& slot = out.terms_[i + j][a * width + b];
                    slot = checked_add(slot, checked_mul(x, y));
                }
            }
        }
    }
    return out;
}

void TruncatedSeries::multiply_letter(Letter l) {
    const std::size_t n = static_cast<std::size_t>(rank_);
    const std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
    if (l > 0) {
        // s (1 + X_g): degree k gains s[k-1] with g appended.
        for (int k = cap_; k >= 1; --k) {
            auto& dst = terms_[k];
            const auto& src = terms_[k - 1];
            for (std::size_t a = 0; a < src.size(); ++a) {
                if (src[a] != 0) dst[a * n + g] = checked_add(dst[a * n + g], src[a]);
            }
        }
    } else {
        // t = s (1 + X_g)^-1 solves t + t X_g = s, degree by degree.
        for (int k = 1; k <= cap_; ++k) {
            auto& cur = terms_[k];
            const auto& prev = terms_[k - 1];
            for (std::size_t a = 0; a < prev.size(); ++a) {
                if (prev[a] != 0) cur[a * n + g] = checked_add(cur[a * n + g], -prev[a]);
            }
        }
    }
}

bool TruncatedSeries::is_one() const { return terms_[0][0] == 1 && !lowest_degree(); }

std::optional<int> TruncatedSeries::lowest_degree() const {
    for (int k = 1; k <= cap_; ++k) {
        for (auto c : terms_[k]) {
            if (c != 0) return k;
        }
    }
    return std::nullopt;
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    const std::size_t n = static_cast<std::size_t>(rank_);
    for (int k = 0; k <= cap_; ++k) {
        for (std::size_t idx = 0; idx < terms_[k].size(); ++idx) {
            const std::int64_t c = terms_[k][idx];
            if (c == 0) continue;
            std::string mono;
            std::size_t rest = idx;
            std::vector<std::size_t> letters(static_cast<std::size_t>(k));
            for (int j = k - 1; j >= 0; --j) {
                letters[static_cast<std::size_t>(j)] = rest % n;
                rest /= n;
            }
            for (auto g : letters) mono += "X" + std::to_string(g + 1);
            const std::int64_t mag = c < 0 ? -c : c;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (mono.empty()) {
                out << mag;
            } else {
                if (mag != 1) out << mag;
                out << mono;
            }
            first = false;
        }
    }
    if (first) out << "0";
    return out.str();
}

TruncatedSeries magnus(const Word& w, int cap) {
    TruncatedSeries s = TruncatedSeries::one(w.rank(), cap);
    for (Letter l : w.letters()) s.multiply_letter(l);
    return s;
}

std::optional<int> lcs_depth(const Word& w, int cap) {
    if (w.empty()) fail(ErrorKind::EmptyWord, "the identity has no lower-central depth");
    return magnus(w, cap).lowest_degree();
}

LeadingCoords leading_coords(const Word& w, int cap) {
    if (w.empty()) fail(ErrorKind::EmptyWord, "the identity has no leading coordinates");
    const TruncatedSeries s = magnus(w, cap);
    const auto depth = s.lowest_degree();
    if (!depth) {
        fail(ErrorKind::DepthExceedsCap, "'" + w.str() + "' is trivial modulo gamma_" + std::to_string(cap + 1));
    }
    const auto basis = hall_basis(w.rank(), cap);
    return LeadingCoords{*depth, basis->coordinates(*depth, s.degree(*depth))};
}

}  // namespace ordcone
