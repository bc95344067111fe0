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
// Orderings of free groups.
//
// StandardOrdering is the bi-invariant ordering obtained by ordering every
// lower central quotient gamma_i / gamma_{i+1} with a flag and comparing
// elements at the first level where they survive.
//
// Bi-invariant orderings give conjugate elements the same sign, so they can
// not separate g from x g x^-1. KernelOrdering is the left-invariant ordering
// read lexicographically along F > M > [M, M] > 1, where M is the kernel of
// psi o ab for an integer map psi : Z^n -> Z^(n-1):
//   * F / M embeds in Z^(n-1) and is ordered by a flag;
//   * M / [M, M] embeds, through Fox derivatives pushed into Z[Z^(n-1)],
//     in the free abelian group on keys (generator, shift); it is ordered by
//     a functional on finitely many keys, then by the smallest nonzero key;
//   * [M, M] is ordered by a standard ordering.

#ifndef ORDCONE_STDORD_HPP
#define ORDCONE_STDORD_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordcone/freenil.hpp"
#include "ordcone/znord.hpp"

namespace ordcone {

class StandardOrdering {
public:
    /// Throws DimensionMismatch unless level i has the dimension of the
    /// weight-i Hall basis.
    StandardOrdering(int rank, int cls, std::vector<FlagOrdering> levels);

    /// Lexicographic (identity) flag at every level.
    static StandardOrdering identity(int rank, int cls = kDefaultClass);

    int rank() const noexcept { return rank_; }
    int cls() const noexcept { return cls_; }
    const std::vector<FlagOrdering>& levels() const noexcept { return levels_; }
    const FlagOrdering& level(int i) const { return levels_.at(static_cast<std::size_t>(i - 1)); }

    /// Throws EmptyWord for the identity, DepthExceedsCap when w is in gamma_{cls+1}.
    Sign sign(const Word& w) const;
    StandardOrdering opposite() const;

    friend bool operator==(const StandardOrdering&, const StandardOrdering&) = default;

private:
    int rank_;
    int cls_;
    std::vector<FlagOrdering> levels_;
};

/// Key of a Fox coordinate: derivative by generator `generator`, evaluated at
/// the group-ring element t^shift of Z[Z^(n-1)].
struct FoxKey {
    int generator;
    IntVector shift;
    friend auto operator<=>(const FoxKey&, const FoxKey&) = default;
};

using FoxVector = std::map<FoxKey, std::int64_t>;

/// Fox derivatives of w pushed forward by psi o ab, zero entries dropped.
/// Additive on the kernel of psi o ab.
FoxVector fox_vector(const Word& w, const IntMatrix& psi);

class KernelOrdering {
public:
    KernelOrdering(IntMatrix psi, FlagOrdering quotient, std::map<FoxKey, Rational> functional,
                   StandardOrdering tail, int tie_sign = 1);

    int rank() const noexcept { return tail_.rank(); }
    int cls() const noexcept { return tail_.cls(); }
    const IntMatrix& psi() const noexcept { return psi_; }
    const FlagOrdering& quotient() const noexcept { return quotient_; }
    const std::map<FoxKey, Rational>& functional() const noexcept { return functional_; }
    const StandardOrdering& tail() const noexcept { return tail_; }
    int tie_sign() const noexcept { return tie_sign_; }

    Sign sign(const Word& w) const;
    KernelOrdering opposite() const;

    friend bool operator==(const KernelOrdering&, const KernelOrdering&) = default;

private:
    IntMatrix psi_;
    FlagOrdering quotient_;
    std::map<FoxKey, Rational> functional_;
    StandardOrdering tail_;
    int tie_sign_;
};

/// A left-invariant ordering of a free group in one of the two families above.
class LeftOrdering {
public:
    LeftOrdering(StandardOrdering s) : impl_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
    LeftOrdering(KernelOrdering k) : impl_(std::move(k)) {}    // NOLINT(google-explicit-constructor)

    bool is_standard() const noexcept { return std::holds_alternative<StandardOrdering>(impl_); }
    const StandardOrdering& standard() const { return std::get<StandardOrdering>(impl_); }
    const KernelOrdering& kernel() const { return std::get<KernelOrdering>(impl_); }

    int rank() const;
    int cls() const;
    Sign sign(const Word& w) const;
    LeftOrdering opposite() const;

    friend bool operator==(const LeftOrdering&, const LeftOrdering&) = default;

private:
    std::variant<StandardOrdering, KernelOrdering> impl_;
};

Sign std_sign(const StandardOrdering& s, const Word& w);

enum class Comparison { Less, Equal, Greater };

/// g < h iff g^-1 h is positive.
Comparison compare(const LeftOrdering& s, const Word& g, const Word& h);

/// Standard ordering using `quotient_levels` for levels 1..j-1 and `tail` for
/// levels j..; on words that survive in F / gamma_j it agrees with the quotient.
StandardOrdering pullback(int rank, std::vector<FlagOrdering> quotient_levels, std::vector<FlagOrdering> tail);

struct ConeReport {
    int radius = 0;
    std::size_t words = 0;
    std::size_t pairs = 0;
    std::size_t skipped = 0;
    bool totality = true;
    bool antisymmetry = true;
    bool closure = true;
    bool conjugation = true;
    bool conjugation_required = true;
    bool passed = true;
    std::string failed_axiom;
    std::optional<std::pair<Word, Word>> counterexample;
};

/// Exhaustive check of the cone axioms over reduced words of length <= radius:
/// totality, antisymmetry, closure of positives under products and invariance
/// under conjugation by generators. Conjugation invariance only counts
/// towards `passed` for standard orderings unless `require_conjugation` says
/// otherwise. Products or conjugates beyond the class cap are counted as skipped.
ConeReport verify_cone_axioms(const LeftOrdering& s, int radius, std::optional<bool> require_conjugation = {});

/// Largest r <= r_max such that both orderings agree on every word of length <= r.
int ball_distance(const LeftOrdering& a, const LeftOrdering& b, int r_max);

/// An ordering with g positive and k negative. Throws CommonRoot when g and k
/// share a power, DepthCapExceeded when no construction available at class
/// c_max decides the pair.
LeftOrdering separate(const Word& g, const Word& k, int c_max = kDefaultClass);

}  // namespace ordcone

#endif  // ORDCONE_STDORD_HPP
