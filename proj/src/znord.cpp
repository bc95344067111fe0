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

#include "ordcone/znord.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace ordcone {

FlagOrdering::FlagOrdering(RationalMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
        fail(ErrorKind::DimensionMismatch, "flag matrix must be square and nonempty");
    }
    if (rank(matrix_) != matrix_.rows()) fail(ErrorKind::DimensionMismatch, "flag matrix must have full rank");
}

FlagOrdering FlagOrdering::identity(std::size_t n) { return FlagOrdering(RationalMatrix::identity(n)); }

Sign FlagOrdering::sign(std::span<const std::int64_t> v) const {
    if (v.size() != dim()) fail(ErrorKind::DimensionMismatch, "vector dimension does not match the flag");
    Rational s;
    for (std::size_t i = 0; i < dim(); ++i) {
        s = 0;
        const auto& row = matrix_.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] != 0) s += row[j] * static_cast<long>(v[j]);
        }
        if (s != 0) return sign_of(s);
    }
    return Sign::Zero;
}

Sign FlagOrdering::sign(std::span<const Rational> v) const {
    if (v.size() != dim()) fail(ErrorKind::DimensionMismatch, "vector dimension does not match the flag");
    for (std::size_t i = 0; i < dim(); ++i) {
        Rational s = dot(matrix_.row(i), v);
        if (s != 0) return sign_of(s);
    }
    return Sign::Zero;
}

FlagOrdering FlagOrdering::canonical() const {
    const std::size_t n = dim();
    RationalMatrix out(n, n);
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector row = matrix_.row(i);
        for (std::size_t k = 0; k < i; ++k) {
            const Rational factor = row[pivots[k]] / out(k, pivots[k]);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j) row[j] -= factor * out(k, j);
        }
        auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
        ensure(lead != row.end(), "canonical form of a rank-deficient flag");
        pivots.push_back(static_cast<std::size_t>(lead - row.begin()));
        const Rational scale = abs(*lead);
        for (auto& x : row) x /= scale;
        out.row(i) = std::move(row);
    }
    return FlagOrdering(std::move(out), Unchecked{});
}

bool operator==(const FlagOrdering& a, const FlagOrdering& b) {
    return a.dim() == b.dim() && a.canonical().matrix_ == b.canonical().matrix_;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    RationalMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(a.row(sel), a.row(col));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            Rational factor = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
        }
    }
    return det;
}

IntegerAutomorphism::IntegerAutomorphism(IntMatrix a) : a_(std::move(a)) {
    const std::size_t n = a_.size();
    if (n == 0) fail(ErrorKind::DimensionMismatch, "empty matrix");
    for (const auto& row : a_) {
        if (row.size() != n) fail(ErrorKind::DimensionMismatch, "GL_n(Z) matrix must be square");
    }
    Rational det = determinant(to_rational());
    if (det != 1 && det != -1) {
        fail(ErrorKind::InvalidAutomorphism, "determinant is " + to_string(det) + ", not +-1");
    }
}

IntegerAutomorphism IntegerAutomorphism::identity(std::size_t n) {
    IntMatrix a(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
    return IntegerAutomorphism(std::move(a));
}

bool IntegerAutomorphism::is_identity() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (a_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

IntVector IntegerAutomorphism::apply(std::span<const std::int64_t> v) const {
    if (v.size() != dim()) fail(ErrorKind::DimensionMismatch, "vector dimension does not match the matrix");
    IntVector out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) out[i] += a_[i][j] * v[j];
    return out;
}

IntegerAutomorphism IntegerAutomorphism::operator*(const IntegerAutomorphism& rhs) const {
    if (dim() != rhs.dim()) fail(ErrorKind::DimensionMismatch, "matrix product dimension mismatch");
    IntMatrix out(dim(), IntVector(dim(), 0));
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t k = 0; k < dim(); ++k)
            for (std::size_t j = 0; j < dim(); ++j) out[i][j] += a_[i][k] * rhs.a_[k][j];
    return IntegerAutomorphism(std::move(out));
}

Sign flag_sign(const FlagOrdering& f, std::span<const std::int64_t> v) { return f.sign(v); }

FlagOrdering act(const IntegerAutomorphism& a, const FlagOrdering& f) {
    if (a.dim() != f.dim()) fail(ErrorKind::DimensionMismatch, "automorphism and flag dimensions differ");
    return FlagOrdering(f.matrix() * a.to_rational());
}

namespace {

// Nonzero vectors of {-1,0,1}^n ordered by support size, then
// lexicographically with 1 before -1 before 0.
std::vector<IntVector> unit_cube_vectors(std::size_t n) {
    std::vector<IntVector> out;
    const int digits[3] = {1, -1, 0};
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        IntVector v(n, 0);
        std::size_t c = code;
        for (std::size_t i = n; i-- > 0;) {
            v[i] = digits[c % 3];
            c /= 3;
        }
        if (std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; })) out.push_back(std::move(v));
    }
    std::stable_sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
        auto support = [](const IntVector& v) { return std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }); };
        return support(a) < support(b);
    });
    return out;
}

bool positive_multiple(const IntVector& v, const IntVector& w) {
    // w = lambda v with lambda > 0
    const RationalMatrix m = RationalMatrix::from_ints({v, w});
    if (rank(m) != 1) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) return (v[i] > 0) == (w[i] > 0);
    }
    return false;
}

}  // namespace

GlWitness gl_witness(const IntegerAutomorphism& a) {
    if (a.is_identity()) fail(ErrorKind::IsIdentity, "the identity fixes every ordering");
    const std::size_t n = a.dim();
    const FlagOrdering lex = FlagOrdering::identity(n);
    for (const auto& v : unit_cube_vectors(n)) {
        const IntVector w = a.apply(v);
        const Sign before = lex.sign(v);
        const Sign after = lex.sign(w);
        if (before != after) return GlWitness{lex, v, before, after};
    }
    for (std::size_t j = 0; j < n; ++j) {
        IntVector e(n, 0);
        e[j] = 1;
        const IntVector w = a.apply(e);
        if (positive_multiple(e, w)) continue;
        const RationalVector pos = to_rational(e);
        const RationalVector neg = to_rational(w);
        RationalVector f = strict_separator(std::span(&pos, 1), std::span(&neg, 1));
        FlagOrdering flag(RationalMatrix(complete_to_basis({std::move(f)}, n)));
        GlWitness out{flag, e, flag.sign(e), flag.sign(w)};
        ensure(out.before == Sign::Positive && out.after == Sign::Negative, "gl_witness separator check");
        return out;
    }
    fail(ErrorKind::Internal, "no GL witness found for a non-identity matrix");
}

FlagOrdering realize_flag(std::span<const IntVector> positives) {
    if (positives.empty()) fail(ErrorKind::EmptyInput, "no vectors to make positive");
    const std::size_t n = positives.front().size();
    std::vector<RationalVector> remaining;
    for (const auto& v : positives) {
        if (v.size() != n) fail(ErrorKind::DimensionMismatch, "vectors of different dimension");
        if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) {
            fail(ErrorKind::ZeroVectorInput, "zero vector cannot be positive");
        }
        remaining.push_back(to_rational(v));
    }

    std::vector<RationalVector> rows;
    while (!remaining.empty()) {
        std::optional<RationalVector> chosen;
        for (std::size_t i = 0; i < n && !chosen; ++i) {
            for (int s : {1, -1}) {
                RationalVector e(n, Rational(0));
                e[i] = s;
                bool nonneg = true, some_positive = false;
                for (const auto& v : remaining) {
                    const Rational d = dot(e, v);
                    if (d < 0) {
                        nonneg = false;
                        break;
                    }
                    if (d > 0) some_positive = true;
                }
                if (nonneg && some_positive) {
                    chosen = std::move(e);
                    break;
                }
            }
        }
        if (!chosen) {
            ConeCertificate cert = classify_cone(remaining);
            if (const auto* z = std::get_if<ZeroCombo>(&cert)) {
                std::ostringstream msg;
                msg << "nonnegative combination (";
                for (std::size_t i = 0; i < z->coefficients.size(); ++i) {
                    msg << (i ? "," : "") << z->coefficients[i].get_str();
                }
                msg << ") of the boundary vectors vanishes";
                fail(ErrorKind::NoCone, msg.str());
            }
            chosen = std::get<Halfspace>(cert).functional;
        }
        std::vector<RationalVector> boundary;
        for (auto& v : remaining) {
            if (dot(*chosen, v) == 0) boundary.push_back(std::move(v));
        }
        rows.push_back(std::move(*chosen));
        remaining = std::move(boundary);
    }
    FlagOrdering flag(RationalMatrix(complete_to_basis(std::move(rows), n)));
    for (const auto& v : positives) ensure(flag.sign(v) == Sign::Positive, "realize_flag left an input non-positive");
    return flag;
}

}  // namespace ordcone
