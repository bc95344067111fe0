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
// Exact rational linear algebra and the cone-separation certificates the rest
// of the library is built on. Nothing here touches floating point.

#ifndef ORDCONE_EXACTLIN_HPP
#define ORDCONE_EXACTLIN_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace ordcone {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
/// Parses "p/q" or "p"; throws Error(Parse) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

RationalVector to_rational(std::span<const std::int64_t> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);

/// Positive rescaling of a nonzero vector to a primitive integer vector.
RationalVector primitive_integer(RationalVector v);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    explicit RationalMatrix(std::vector<RationalVector> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_ints(const std::vector<IntVector>& rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    const RationalVector& row(std::size_t i) const { return rows_[i]; }
    RationalVector& row(std::size_t i) { return rows_[i]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const std::vector<RationalVector>& data() const noexcept { return rows_; }

    RationalVector apply(std::span<const Rational> v) const;
    RationalVector apply(std::span<const std::int64_t> v) const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator-() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::vector<RationalVector> rows_;
    std::size_t cols_ = 0;
};

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RationalMatrix& m);
/// Exact basis of the right null space (one vector per free column).
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
/// Appends standard basis vectors (in index order) until the rows span Q^n.
std::vector<RationalVector> complete_to_basis(std::vector<RationalVector> rows, std::size_t n);
/// Inverse of a square full-rank matrix; throws DimensionMismatch when singular.
RationalMatrix inverse(const RationalMatrix& m);

struct Halfspace {
    RationalVector functional;
};

struct ZeroCombo {
    std::vector<Integer> coefficients;
};

using ConeCertificate = std::variant<Halfspace, ZeroCombo>;

/// Gordan dichotomy for a finite set of nonzero vectors: either a functional
/// that is strictly positive on every input, or a nonnegative integer
/// combination (gcd 1, not all zero) summing to the zero vector. The returned
/// certificate has already been checked by `certificate_holds`.
ConeCertificate classify_cone(std::span<const RationalVector> vs);

bool certificate_holds(const ConeCertificate& cert, std::span<const RationalVector> vs);

/// A primitive integer functional f with f.p > 0 on `pos` and f.q < 0 on `neg`.
/// The search is Fourier-Motzkin elimination of the last coordinate first,
/// back-substituting the integer of least magnitude allowed at each step, so
/// the answer is a deterministic function of the input order.
/// Throws NoSeparator when 0 lies in the semigroup spanned by pos and -neg.
RationalVector strict_separator(std::span<const RationalVector> pos, std::span<const RationalVector> neg);

}  // namespace ordcone

#endif  // ORDCONE_EXACTLIN_HPP
