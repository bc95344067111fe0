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

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back() == -l) {
        out.pop_back();
    } else {
        out.push_back(l);
    }
}

// Position of a letter in the order x1 < x1^-1 < x2 < x2^-1 < ...
int letter_rank(Letter l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

struct Token {
    int generator;
    std::int64_t exponent;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_digits = [&](const char* what) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i || i - start > 9) {
            fail(ErrorKind::Parse, std::string("expected ") + what + " in word '" + std::string(text) + "'");
        }
        return std::stoll(std::string(text.substr(start, i - start)));
    };
    skip_space();
    if (i < text.size() && text.substr(i) == "1") return tokens;
    while (true) {
        skip_space();
        if (i == text.size()) break;
        if (text[i] != 'x') fail(ErrorKind::Parse, "unexpected '" + std::string(1, text[i]) + "' in word '" + std::string(text) + "'");
        ++i;
        Token t{static_cast<int>(read_digits("a generator index")), 1};
        if (t.generator < 1) fail(ErrorKind::Parse, "generator indices start at 1");
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool negative = false;
            if (i < text.size() && text[i] == '-') {
                negative = true;
                ++i;
            }
            t.exponent = read_digits("an exponent");
            if (negative) t.exponent = -t.exponent;
        }
        tokens.push_back(t);
    }
    return tokens;
}

}  // namespace

Word::Word(int rank, const std::vector<Letter>& letters) : rank_(rank) {
    for (Letter l : letters) {
        if (l == 0 || std::abs(l) > rank) {
            fail(ErrorKind::RankMismatch, "letter " + std::to_string(l) + " outside rank " + std::to_string(rank));
        }
        push_reduced(letters_, l);
    }
}

Word Word::generator(int rank, int g, int exponent) {
    std::vector<Letter> letters(static_cast<std::size_t>(std::abs(exponent)), exponent < 0 ? -g : g);
    return Word(rank, letters);
}

Word Word::inverse() const {
    Word out(rank_);
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
    return out;
}

Word Word::pow(std::int64_t e) const {
    const Word base = e < 0 ? inverse() : *this;
    Word out(rank_);
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
    return out;
}

Word Word::operator*(const Word& rhs) const {
    if (rank_ != rhs.rank_) fail(ErrorKind::RankMismatch, "product of words over different ranks");
    Word out = *this;
    for (Letter l : rhs.letters_) push_reduced(out.letters_, l);
    return out;
}

IntVector Word::abelianization() const {
    IntVector v(static_cast<std::size_t>(rank_), 0);
    for (Letter l : letters_) v[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
    return v;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < letters_.size()) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        const long run = static_cast<long>(j - i);
        const long exponent = letters_[i] > 0 ? run : -run;
        if (!out.empty()) out += ' ';
        out += 'x' + std::to_string(std::abs(letters_[i]));
        if (exponent != 1) out += '^' + std::to_string(exponent);
        i = j;
    }
    return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (auto c = letter_rank(a.letters_[i]) <=> letter_rank(b.letters_[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

int max_generator_index(std::string_view text) {
    int m = 0;
    for (const auto& t : tokenize(text)) m = std::max(m, t.generator);
    return m;
}

Word parse_word(std::string_view text, int rank) {
    auto tokens = tokenize(text);
    int needed = 0;
    for (const auto& t : tokens) needed = std::max(needed, t.generator);
    if (rank == 0) rank = std::max(2, needed);
    if (needed > rank) {
        fail(ErrorKind::RankMismatch, "word '" + std::string(text) + "' uses x" + std::to_string(needed) +
                                          " but the rank is " + std::to_string(rank));
    }
    std::vector<Letter> letters;
    for (const auto& t : tokens) {
        if (t.exponent > 1000000 || t.exponent < -1000000) fail(ErrorKind::Parse, "exponent too large");
        const Letter l = t.exponent < 0 ? -t.generator : t.generator;
        for (std::int64_t k = 0; k < (t.exponent < 0 ? -t.exponent : t.exponent); ++k) letters.push_back(l);
    }
    return Word(rank, letters);
}

std::vector<Word> ball(int rank, int radius, bool with_identity) {
    std::vector<Word> out;
    std::vector<Word> layer{Word(rank)};
    if (with_identity) out.push_back(layer.front());
    for (int len = 1; len <= radius; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (int g = 1; g <= rank; ++g) {
                for (Letter l : {g, -g}) {
                    if (!w.empty() && w.letters().back() == -l) continue;
                    std::vector<Letter> letters = w.letters();
                    letters.push_back(l);
                    next.emplace_back(rank, letters);
                }
            }
        }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace ordcone
