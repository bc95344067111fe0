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
// Flag orderings of Z^n and the GL_n(Z) action on them.

#ifndef ORDCONE_ZNORD_HPP
#define ORDCONE_ZNORD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ordcone/error.hpp"
#include "ordcone/exactlin.hpp"

namespace ordcone {

using IntMatrix = std::vector<IntVector>;

/// An ordering of Z^n read lexicographically through a full-rank rational
/// matrix: the sign of v is the sign of the first nonzero entry of M v.
/// Rows are the flag functionals, outermost first.
class FlagOrdering {
public:
    /// Throws DimensionMismatch unless `m` is square of full rank.
    explicit FlagOrdering(RationalMatrix m);

    static FlagOrdering identity(std::size_t n);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const RationalMatrix& matrix() const noexcept { return matrix_; }

    Sign sign(std::span<const std::int64_t> v) const;
    Sign sign(std::span<const Rational> v) const;

    FlagOrdering opposite() const { return FlagOrdering(-matrix_, Unchecked{}); }

    /// Canonical representative of the sign function: each row is reduced
    /// modulo the rows above it (zero in their pivot columns) and scaled
    /// positively so its first nonzero entry is +-1.
    FlagOrdering canonical() const;

    /// Semantic equality: same sign on every integer vector.
    friend bool operator==(const FlagOrdering& a, const FlagOrdering& b);

private:
    struct Unchecked {};
    FlagOrdering(RationalMatrix m, Unchecked) : matrix_(std::move(m)) {}

    RationalMatrix matrix_;
};

/// Integer matrix with determinant +-1.
class IntegerAutomorphism {
public:
    /// Throws DimensionMismatch when not square, InvalidAutomorphism when |det| != 1.
    explicit IntegerAutomorphism(IntMatrix a);

    static IntegerAutomorphism identity(std::size_t n);

    std::size_t dim() const noexcept { return a_.size(); }
    const IntMatrix& matrix() const noexcept { return a_; }
    bool is_identity() const;

    IntVector apply(std::span<const std::int64_t> v) const;
    IntegerAutomorphism operator*(const IntegerAutomorphism& rhs) const;
    RationalMatrix to_rational() const { return RationalMatrix::from_ints(a_); }

private:
    IntMatrix a_;
};

Rational determinant(const RationalMatrix& m);

Sign flag_sign(const FlagOrdering& f, std::span<const std::int64_t> v);
inline FlagOrdering opposite(const FlagOrdering& f) { return f.opposite(); }

/// Pullback of `f` along A: the result orders v the way `f` orders A v.
FlagOrdering act(const IntegerAutomorphism& a, const FlagOrdering& f);

struct GlWitness {
    FlagOrdering flag;
    IntVector vector;
    Sign before;  // sign of v
    Sign after;   // sign of A v
};

/// A flag ordering and a vector whose sign A changes. Throws IsIdentity for A = I.
GlWitness gl_witness(const IntegerAutomorphism& a);

/// A flag ordering making every input positive; throws NoCone when a
/// nonnegative combination of the inputs vanishes.
FlagOrdering realize_flag(std::span<const IntVector> positives);

}  // namespace ordcone

#endif  // ORDCONE_ZNORD_HPP
