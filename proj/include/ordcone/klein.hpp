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
// The Klein bottle group K = <x, y | x^-1 y x = y^-1> in normal form x^a y^b,
// its four left orderings and the action of Aut(K) and Out(K) on them.

#ifndef ORDCONE_KLEIN_HPP
#define ORDCONE_KLEIN_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordcone/error.hpp"

namespace ordcone {

struct KleinElement {
    std::int64_t a = 0;  // exponent of x
    std::int64_t b = 0;  // exponent of y
    bool is_identity() const noexcept { return a == 0 && b == 0; }
    std::string str() const;
    friend bool operator==(const KleinElement&, const KleinElement&) = default;
};

/// (a, b)(a', b') = (a + a', (-1)^a' b + b'), from y x^a' = x^a' y^((-1)^a').
KleinElement k_mul(const KleinElement& p, const KleinElement& q);
KleinElement k_inverse(const KleinElement& p);
KleinElement k_pow(const KleinElement& p, std::int64_t e);

/// Words in x, y with optional integer exponents, e.g. "x^2 y^-1 x"; "1" is the identity.
KleinElement parse_klein_element(std::string_view text);

/// Positive cone {eps a > 0} union {a = 0, delta b > 0}.
class KleinOrdering {
public:
    /// Throws Parse unless eps and delta are +-1.
    KleinOrdering(int eps, int delta);

    int eps() const noexcept { return eps_; }
    int delta() const noexcept { return delta_; }
    KleinOrdering opposite() const { return KleinOrdering(-eps_, -delta_); }
    std::string str() const;

    friend bool operator==(const KleinOrdering&, const KleinOrdering&) = default;

private:
    int eps_;
    int delta_;
};

/// Throws IdentityElement for (0, 0).
Sign k_sign(const KleinOrdering& o, const KleinElement& p);

/// Totality, antisymmetry and closure on the box |a|, |b| <= radius.
bool k_verify_cone(const KleinOrdering& o, int radius);

/// The four cones in the order (+,+), (+,-), (-,+), (-,-), each verified on |a|, |b| <= 4.
std::vector<KleinOrdering> k_enumerate_orderings();

/// Automorphism given by the images of x and y.
class KleinAut {
public:
    /// Throws InvalidAutomorphism unless the images satisfy the relation and
    /// an inverse exists with images in the box |a|, |b| <= 8.
    KleinAut(KleinElement x_image, KleinElement y_image);

    static KleinAut identity() { return KleinAut({1, 0}, {0, 1}); }
    /// p -> g p g^-1
    static KleinAut conjugation(const KleinElement& g);

    const KleinElement& x_image() const noexcept { return x_; }
    const KleinElement& y_image() const noexcept { return y_; }

    KleinElement apply(const KleinElement& p) const;
    KleinAut inverse() const;
    /// (*this) o inner
    KleinAut compose(const KleinAut& inner) const;
    bool is_identity() const noexcept { return x_ == KleinElement{1, 0} && y_ == KleinElement{0, 1}; }
    std::string str() const;

    friend bool operator==(const KleinAut&, const KleinAut&) = default;

private:
    std::optional<std::pair<KleinElement, KleinElement>> preimages() const;

    KleinElement x_;
    KleinElement y_;
};

/// "x -> x y ; y -> y"; a generator not mentioned is fixed.
KleinAut parse_klein_aut(std::string_view text);

/// The ordering p > 1 iff phi(p) > 1 in o; matched among the four cones and
/// re-checked on the box |a|, |b| <= 3.
KleinOrdering k_pull(const KleinAut& phi, const KleinOrdering& o);

/// Conjugator g with |a|, |b| <= bound and phi = conjugation(g), if any.
std::optional<KleinElement> inner_conjugator(const KleinAut& phi, int bound = 8);
/// Closed form: phi is inner iff x -> x y^(2t).
bool is_inner_closed_form(const KleinAut& phi);

struct OutTable {
    std::array<std::string, 4> names;
    std::array<KleinAut, 4> representatives;
    std::array<std::array<int, 4>, 4> product{};  // class of reps[i] o reps[j]
    std::array<std::array<int, 4>, 4> action{};   // action[i][j]: index of k_pull(reps[i], orderings[j])
    std::vector<int> kernel{};                    // classes acting as the identity permutation
    bool klein_four = false;                    // abelian, every element of order <= 2
    bool pairwise_non_inner = false;            // bounded search and closed form agree
    bool alpha1_alpha2_inner = false;           // alpha1 and alpha2 differ by an inner automorphism
    bool conj_y_fixes_all = false;
    bool conj_y_nontrivial = false;
    std::vector<std::vector<int>> conjugation_orbits{};  // orbits of the four cones under inner automorphisms
};

OutTable k_out_table();

struct LocalSearchReport {
    int radius = 0;
    int extend_radius = 0;
    std::size_t locally_consistent = 0;
    std::size_t extendable = 0;
};

/// Counts sign assignments on the box of the given radius that are total,
/// antisymmetric and closed under products staying in the box, and how many
/// of them extend to such an assignment on the larger box.
LocalSearchReport k_local_search(int radius = 3, int extend_radius = 5);

}  // namespace ordcone

#endif  // ORDCONE_KLEIN_HPP
