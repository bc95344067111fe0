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
// Free groups, their truncated Magnus series and Hall-basis coordinates on
// the lower central quotients gamma_i / gamma_{i+1}.
//
// Each gamma_i / gamma_{i+1} of a free group is free abelian, so the torsion
// isolators of the lower central series coincide with the series itself and
// everything below works with gamma_i directly.

#ifndef ORDCONE_FREENIL_HPP
#define ORDCONE_FREENIL_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordcone/exactlin.hpp"
#include "ordcone/znord.hpp"

namespace ordcone {

inline constexpr int kDefaultClass = 5;
inline constexpr int kMaxClass = 7;

/// A letter is +g or -g for generator index g in 1..rank.
using Letter = int;

/// Freely reduced word in the free group of the given rank.
class Word {
public:
    Word() = default;
    explicit Word(int rank) : rank_(rank) {}
    /// Reduces `letters` freely; throws RankMismatch on an out-of-range letter.
    Word(int rank, const std::vector<Letter>& letters);

    static Word generator(int rank, int g, int exponent = 1);

    int rank() const noexcept { return rank_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    Word inverse() const;
    Word pow(std::int64_t e) const;
    Word operator*(const Word& rhs) const;

    /// Exponent sum of each generator.
    IntVector abelianization() const;

    /// "x1 x2^-1 x1^3" style, "1" for the identity.
    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    /// Length first, then letters in the order x1 < x1^-1 < x2 < x2^-1 < ...
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    int rank_ = 0;
    std::vector<Letter> letters_;
};

/// [a, b] = a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

/// Parses whitespace separated tokens `x<i>` or `x<i>^<e>`; "1" or blank is the
/// identity. With rank 0 the rank is the largest index used (at least 2).
Word parse_word(std::string_view text, int rank = 0);
/// Largest generator index mentioned in `text`.
int max_generator_index(std::string_view text);

/// All freely reduced words of length <= radius, shortest first, each length in
/// letter order. The identity is included only when `with_identity` is set.
std::vector<Word> ball(int rank, int radius, bool with_identity = false);

/// Magnus image of a group element: integer noncommutative polynomial in
/// X_1..X_n truncated above total degree `cap`.
class TruncatedSeries {
public:
    TruncatedSeries(int rank, int cap);
    static TruncatedSeries one(int rank, int cap);

    int rank() const noexcept { return rank_; }
    int cap() const noexcept { return cap_; }

    /// Coefficients of the degree-k part; the monomial X_{i1}...X_{ik} sits at
    /// index sum_j (i_j - 1) n^(k-1-j).
    const std::vector<std::int64_t>& degree(int k) const { return terms_[k]; }
    std::int64_t coefficient(const std::vector<int>& monomial) const;

    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    void multiply_letter(Letter l);

    bool is_one() const;
    /// Smallest k >= 1 with a nonzero degree-k coefficient.
    std::optional<int> lowest_degree() const;

    std::string str() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int rank_;
    int cap_;
    std::vector<std::vector<std::int64_t>> terms_;
};

TruncatedSeries magnus(const Word& w, int cap);

/// One element of a Hall basis: a generator (weight 1) or the bracket of two
/// earlier elements.
struct BasicCommutator {
    int weight = 1;
    int generator = 0;  // 1-based, weight 1 only
    int left = -1;
    int right = -1;
};

/// Basic commutators of the free Lie ring on `rank` generators up to weight
/// `cls`. <a, b> is basic when a, b are basic, a < b, and b = <c, d> implies
/// c <= a. Elements are ordered by weight, then by construction.
class HallBasis {
public:
    HallBasis(int rank, int cls);

    int rank() const noexcept { return rank_; }
    int cls() const noexcept { return cls_; }
    const std::vector<BasicCommutator>& elements() const noexcept { return elements_; }

    /// Indices [first, last) of the weight-w elements.
    std::pair<int, int> weight_range(int w) const;
    int count(int w) const;

    std::string bracket(int index) const;
    /// The group commutator word whose Magnus leading term is the element.
    Word word(int index) const;
    const std::vector<std::int64_t>& expansion(int index) const { return expansions_[index]; }

    /// Coordinates of a homogeneous Lie polynomial of degree w over the
    /// weight-w basis; the polynomial is given as degree-w coefficients.
    IntVector coordinates(int w, const std::vector<std::int64_t>& homogeneous) const;

private:
    struct Solver {
        std::vector<std::size_t> pivot_rows;
        RationalMatrix inverse;
    };

    int rank_;
    int cls_;
    std::vector<BasicCommutator> elements_;
    std::vector<std::vector<std::int64_t>> expansions_;
    std::vector<int> offsets_;
    std::vector<Solver> solvers_;
};

/// Shared, immutable basis per (rank, class); safe to call concurrently.
std::shared_ptr<const HallBasis> hall_basis(int rank, int cls);

/// Smallest i with magnus(w) - 1 nonzero in degree i, or nullopt when w is
/// trivial modulo gamma_{cap+1}. Throws EmptyWord for the identity.
std::optional<int> lcs_depth(const Word& w, int cap);

struct LeadingCoords {
    int depth;
    IntVector coords;
};

/// Image of w in gamma_d / gamma_{d+1} over the Hall basis, d = lcs_depth(w).
/// Throws DepthExceedsCap when w lies in gamma_{cap+1}.
LeadingCoords leading_coords(const Word& w, int cap);

/// Substitution endomorphism of a free group.
class Endomorphism {
public:
    Endomorphism(int rank, std::vector<Word> images);
    static Endomorphism identity(int rank);

    int rank() const noexcept { return rank_; }
    const std::vector<Word>& images() const noexcept { return images_; }

    Word apply(const Word& w) const;
    /// (*this) o inner
    Endomorphism compose(const Endomorphism& inner) const;
    bool is_identity() const;

    std::string str() const;

    friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

private:
    int rank_;
    std::vector<Word> images_;
};

inline Word apply(const Endomorphism& phi, const Word& w) { return phi.apply(w); }
inline Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) { return phi.compose(psi); }

/// "x1 -> x1 x2 ; x2 -> x2"; generators not mentioned are fixed.
Endomorphism parse_endomorphism(std::string_view text, int rank = 0);

/// Matrix of the map phi induces on gamma_i / gamma_{i+1}; column j holds the
/// coordinates of phi applied to the j-th weight-i basic commutator.
IntMatrix induced_matrix(const Endomorphism& phi, int level, int cap);

}  // namespace ordcone

#endif  // ORDCONE_FREENIL_HPP
