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
// Automorphisms of free groups acting on orderings and on the boundary.

#ifndef ORDCONE_AUTACT_HPP
#define ORDCONE_AUTACT_HPP

#include "ordcone/freenil.hpp"
#include "ordcone/roots.hpp"
#include "ordcone/stdord.hpp"

namespace ordcone {

/// Sign of w in the pulled-back ordering: w <_phi 1 iff phi(w) < 1.
Sign pulled_sign(const Endomorphism& phi, const LeftOrdering& s, const Word& w);

/// An ordering P and a word g with g in P and phi(g) not in P.
class OrderingWitness {
public:
    /// Recomputes both signs; throws Internal unless they differ.
    OrderingWitness(const Endomorphism& phi, LeftOrdering ordering, Word word);

    const LeftOrdering& ordering() const noexcept { return ordering_; }
    const Word& word() const noexcept { return word_; }
    Sign sign_before() const noexcept { return before_; }
    Sign sign_after() const noexcept { return after_; }

private:
    LeftOrdering ordering_;
    Word word_;
    Sign before_;
    Sign after_;
};

/// Inverse of phi found by Nielsen reduction of its images, falling back to a
/// search over image words of length <= max_length. Throws NonAutomorphism
/// when neither succeeds; that verdict means "not verified".
Endomorphism automorphism_inverse(const Endomorphism& phi, int max_length = 8);

/// Throws IdentityAutomorphism, NonAutomorphism or DepthCapExceeded.
OrderingWitness tm1_witness(const Endomorphism& phi, int c_max = kDefaultClass);

/// First word g in length-lex order with no common power between g and phi(g).
/// Throws IdentityAutomorphism, NonAutomorphism or NotFoundWithinBall.
Word boundary_separation(const Endomorphism& phi, int radius = 4);

}  // namespace ordcone

#endif  // ORDCONE_AUTACT_HPP
