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

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "ordcone/freenil.hpp"

namespace ordcone {

Endomorphism::Endomorphism(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != rank) fail(ErrorKind::RankMismatch, "need one image per generator");
    for (const auto& w : images_) {
        if (w.rank() != rank) fail(ErrorKind::RankMismatch, "image word over a different rank");
    }
}

Endomorphism Endomorphism::identity(int rank) {
    std::vector<Word> images;
    for (int g = 1; g <= rank; ++g) images.push_back(Word::generator(rank, g));
    return Endomorphism(rank, std::move(images));
}

Word Endomorphism::apply(const Word& w) const {
    if (w.rank() != rank_) fail(ErrorKind::RankMismatch, "word and endomorphism ranks differ");
    std::vector<Letter> letters;
    for (Letter l : w.letters()) {
        const Word& img = images_[static_cast<std::size_t>(std::abs(l) - 1)];
        if (l > 0) {
            letters.insert(letters.end(), img.letters().begin(), img.letters().end());
        } else {
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) letters.push_back(-*it);
        }
    }
    return Word(rank_, letters);
}

Endomorphism Endomorphism::compose(const Endomorphism& inner) const {
    if (inner.rank_ != rank_) fail(ErrorKind::RankMismatch, "composing endomorphisms of different ranks");
    std::vector<Word> images;
    images.reserve(inner.images_.size());
    for (const auto& w : inner.images_) images.push_back(apply(w));
    return Endomorphism(rank_, std::move(images));
}

bool Endomorphism::is_identity() const { return *this == identity(rank_); }

std::string Endomorphism::str() const {
    std::string out;
    for (int g = 1; g <= rank_; ++g) {
        if (g > 1) out += " ; ";
        out += "x" + std::to_string(g) + " -> " + images_[static_cast<std::size_t>(g - 1)].str();
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Endomorphism parse_endomorphism(std::string_view text, int rank) {
    std::vector<std::pair<int, std::string_view>> clauses;
    int needed = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view clause = trim(text.substr(start, end - start));
        start = end + 1;
        if (clause.empty()) continue;
        const auto arrow = clause.find("->");
        if (arrow == std::string_view::npos) fail(ErrorKind::Parse, "expected 'x<i> -> word' in '" + std::string(clause) + "'");
        const std::string_view lhs = trim(clause.substr(0, arrow));
        const std::string_view rhs = trim(clause.substr(arrow + 2));
        const Word source = parse_word(lhs, std::max(1, max_generator_index(lhs)));
        if (source.size() != 1 || source.letters().front() < 0) {
            fail(ErrorKind::Parse, "left side of '" + std::string(clause) + "' must be a single generator");
        }
        const int g = source.letters().front();
        needed = std::max({needed, g, max_generator_index(rhs)});
        clauses.emplace_back(g, rhs);
    }
    if (rank == 0) rank = std::max(2, needed);
    if (needed > rank) fail(ErrorKind::RankMismatch, "endomorphism mentions a generator beyond rank " + std::to_string(rank));
    Endomorphism phi = Endomorphism::identity(rank);
    std::vector<Word> images = phi.images();
    std::vector<bool> seen(static_cast<std::size_t>(rank) + 1, false);
    for (const auto& [g, rhs] : clauses) {
        if (seen[static_cast<std::size_t>(g)]) fail(ErrorKind::Parse, "generator x" + std::to_string(g) + " assigned twice");
        seen[static_cast<std::size_t>(g)] = true;
        images[static_cast<std::size_t>(g - 1)] = parse_word(rhs, rank);
    }
    return Endomorphism(rank, std::move(images));
}

IntMatrix induced_matrix(const Endomorphism& phi, int level, int cap) {
    if (level < 1 || level > cap) fail(ErrorKind::LevelExceedsCap, "level must lie in 1..cap");
    const auto basis = hall_basis(phi.rank(), cap);
    const auto [first, last] = basis->weight_range(level);
    const std::size_t r = static_cast<std::size_t>(last - first);
    IntMatrix m(r, IntVector(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
        const Word image = phi.apply(basis->word(first + static_cast<int>(j)));
        if (image.empty()) continue;
        const TruncatedSeries s = magnus(image, level);
        const auto depth = s.lowest_degree();
        ensure(!depth || *depth >= level, "endomorphism image of a basic commutator is too shallow");
        if (!depth) continue;  // lands in gamma_{level+1}
        const IntVector col = basis->coordinates(level, s.degree(level));
        for (std::size_t i = 0; i < r; ++i) m[i][j] = col[i];
    }
    return m;
}

}  // namespace ordcone
