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

#include "ordcone/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "ordcone/error.hpp"

namespace ordcone {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) fail(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            fail(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RationalVector to_rational(std::span<const std::int64_t> v) {
    RationalVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot product of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RationalVector primitive_integer(RationalVector v) {
    Integer lcm_den = 1;
    for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    for (auto& x : v) {
        x *= lcm_den;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g != 0) {
        for (auto& x : v) x /= g;
    }
    return v;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows, RationalVector(cols, Rational(0))), cols_(cols) {}

RationalMatrix::RationalMatrix(std::vector<RationalVector> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_.front().size();
    for (const auto& r : rows_) {
        if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_ints(const std::vector<IntVector>& rows) {
    std::vector<RationalVector> r;
    r.reserve(rows.size());
    for (const auto& row : rows) r.push_back(to_rational(row));
    return RationalMatrix(std::move(r));
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix-vector dimension mismatch");
    RationalVector out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(dot(r, v));
    return out;
}

RationalVector RationalMatrix::apply(std::span<const std::int64_t> v) const {
    auto q = to_rational(v);
    return apply(std::span<const Rational>(q));
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows()) fail(ErrorKind::DimensionMismatch, "matrix product dimension mismatch");
    RationalMatrix out(rows(), rhs.cols());
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (rows_[i][k] == 0) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += rows_[i][k] * rhs(k, j);
        }
    }
    return out;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix out = *this;
    for (auto& r : out.rows_)
        for (auto& x : r) x = -x;
    return out;
}

RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots) {
    if (pivots) pivots->clear();
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t sel = lead_row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        std::swap(m.row(sel), m.row(lead_row));
        Rational p = m(lead_row, col);
        for (auto& x : m.row(lead_row)) x /= p;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col) == 0) continue;
            Rational factor = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= factor * m(lead_row, j);
        }
        if (pivots) pivots->push_back(col);
        ++lead_row;
    }
    return m;
}

std::size_t rank(const RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    RationalMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RationalVector> complete_to_basis(std::vector<RationalVector> rows, std::size_t n) {
    std::size_t current = rows.empty() ? 0 : rank(RationalMatrix(rows));
    for (std::size_t i = 0; i < n && current < n; ++i) {
        RationalVector e(n, Rational(0));
        e[i] = 1;
        rows.push_back(e);
        std::size_t r = rank(RationalMatrix(rows));
        if (r == current) {
            rows.pop_back();
        } else {
            current = r;
        }
    }
    return rows;
}

RationalMatrix inverse(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots;
    aug = rref(std::move(aug), &pivots);
    if (pivots.size() < n || pivots[n - 1] != n - 1) fail(ErrorKind::DimensionMismatch, "matrix is singular");
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

namespace {

// One row a.x >= b of a Fourier-Motzkin system, remembering the nonnegative
// multipliers of the original rows that produced it.
struct Row {
    RationalVector a;
    Rational b;
    RationalVector mult;
    std::size_t support = 0;
};

void normalize(Row& row) {
    const Rational* lead = nullptr;
    for (const auto& x : row.a) {
        if (x != 0) {
            lead = &x;
            break;
        }
    }
    Rational scale = lead ? abs(*lead) : (row.b != 0 ? abs(row.b) : Rational(1));
    if (scale == 1) return;
    for (auto& x : row.a) x /= scale;
    row.b /= scale;
    for (auto& x : row.mult) x /= scale;
}

struct Infeasible {
    RationalVector mult;
};

// Solves u_i . x >= 1 for all i. Returns the feasible point or the
// multipliers y >= 0 with sum_i y_i u_i = 0, sum_i y_i > 0.
std::variant<RationalVector, Infeasible> solve_strict(std::span<const RationalVector> us) {
    const std::size_t m = us.size();
    const std::size_t n = us.front().size();
    std::vector<Row> system;
    system.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Row r{us[i], Rational(1), RationalVector(m, Rational(0)), 1};
        r.mult[i] = 1;
        normalize(r);
        system.push_back(std::move(r));
    }

    // stages[k] is the system in variables 0..k, kept for back-substitution.
    std::vector<std::vector<Row>> stages(n);
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t k = n - 1 - step;
        stages[k] = system;
        std::vector<Row> lower, upper, next;
        for (auto& r : system) {
            if (r.a[k] > 0) {
                lower.push_back(r);
            } else if (r.a[k] < 0) {
                upper.push_back(r);
            } else {
                next.push_back(r);
            }
        }
        // Chernikov: after `step + 1` eliminations a non-redundant row combines
        // at most step + 2 originals.
        const std::size_t max_support = step + 2;
        std::map<std::pair<std::vector<std::string>, std::string>, bool> seen;
        auto key_of = [](const Row& r) {
            std::vector<std::string> a;
            a.reserve(r.a.size());
            for (const auto& x : r.a) a.push_back(to_string(x));
            return std::make_pair(std::move(a), to_string(r.b));
        };
        for (const auto& r : next) seen[key_of(r)] = true;
        for (const auto& lo : lower) {
            for (const auto& up : upper) {
                Row c;
                const Rational wl = -up.a[k];
                const Rational wu = lo.a[k];
                c.a.resize(n);
                for (std::size_t j = 0; j < n; ++j) c.a[j] = wl * lo.a[j] + wu * up.a[j];
                c.a[k] = 0;
                c.b = wl * lo.b + wu * up.b;
                c.mult.resize(m);
                c.support = 0;
                for (std::size_t j = 0; j < m; ++j) {
                    c.mult[j] = wl * lo.mult[j] + wu * up.mult[j];
                    if (c.mult[j] != 0) ++c.support;
                }
                if (c.support > max_support) continue;
                normalize(c);
                if (is_zero(c.a) && c.b > 0) return Infeasible{c.mult};
                if (is_zero(c.a)) continue;
                auto key = key_of(c);
                if (seen.emplace(std::move(key), true).second) next.push_back(std::move(c));
            }
        }
        for (const auto& r : next) {
            if (is_zero(r.a) && r.b > 0) return Infeasible{r.mult};
        }
        if (next.size() > 200000) fail(ErrorKind::Internal, "cone system too large for Fourier-Motzkin");
        system = std::move(next);
    }

    RationalVector x(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        std::optional<Rational> lo, hi;
        for (const auto& r : stages[k]) {
            if (r.a[k] == 0) continue;
            Rational rest = r.b;
            for (std::size_t j = 0; j < k; ++j) rest -= r.a[j] * x[j];
            Rational bound = rest / r.a[k];
            if (r.a[k] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        Rational pick = 0;
        if (lo && pick < *lo) {
            Integer c;
            mpz_cdiv_q(c.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
            pick = Rational(c);
        }
        if (hi && pick > *hi) {
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
            pick = Rational(f);
        }
        if ((lo && pick < *lo) || (hi && pick > *hi)) {
            ensure(lo && hi && *lo <= *hi, "Fourier-Motzkin back-substitution found an empty range");
            pick = (*lo + *hi) / 2;
        }
        x[k] = pick;
    }
    return x;
}

void check_inputs(std::span<const RationalVector> vs) {
    if (vs.empty()) fail(ErrorKind::EmptyInput, "no vectors given");
    const std::size_t n = vs.front().size();
    for (const auto& v : vs) {
        if (v.size() != n) fail(ErrorKind::DimensionMismatch, "vectors of different dimension");
        if (is_zero(v)) fail(ErrorKind::ZeroVectorInput, "zero vector in input");
    }
    if (n == 0) fail(ErrorKind::DimensionMismatch, "zero-dimensional vectors");
}

ZeroCombo to_zero_combo(const RationalVector& mult) {
    RationalVector scaled = primitive_integer(mult);
    ZeroCombo z;
    z.coefficients.reserve(scaled.size());
    for (const auto& q : scaled) z.coefficients.push_back(q.get_num());
    return z;
}

}  // namespace

bool certificate_holds(const ConeCertificate& cert, std::span<const RationalVector> vs) {
    if (const auto* h = std::get_if<Halfspace>(&cert)) {
        if (is_zero(h->functional)) return false;
        return std::all_of(vs.begin(), vs.end(), [&](const RationalVector& v) { return dot(h->functional, v) > 0; });
    }
    const auto& z = std::get<ZeroCombo>(cert);
    if (z.coefficients.size() != vs.size()) return false;
    bool any = false;
    for (const auto& c : z.coefficients) {
        if (c < 0) return false;
        if (c != 0) any = true;
    }
    if (!any) return false;
    RationalVector sum(vs.front().size(), Rational(0));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += Rational(z.coefficients[i]) * vs[i][j];
    return is_zero(sum);
}

ConeCertificate classify_cone(std::span<const RationalVector> vs) {
    check_inputs(vs);
    auto result = solve_strict(vs);
    ConeCertificate cert;
    if (auto* x = std::get_if<RationalVector>(&result)) {
        cert = Halfspace{primitive_integer(std::move(*x))};
    } else {
        cert = to_zero_combo(std::get<Infeasible>(result).mult);
    }
    ensure(certificate_holds(cert, vs), "classify_cone produced an invalid certificate");
    return cert;
}

RationalVector strict_separator(std::span<const RationalVector> pos, std::span<const RationalVector> neg) {
    if (pos.empty() || neg.empty()) fail(ErrorKind::EmptyInput, "separator needs both sides nonempty");
    std::vector<RationalVector> us(pos.begin(), pos.end());
    for (const auto& q : neg) {
        RationalVector m = q;
        for (auto& x : m) x = -x;
        us.push_back(std::move(m));
    }
    check_inputs(us);
    auto result = solve_strict(us);
    if (std::holds_alternative<Infeasible>(result)) {
        fail(ErrorKind::NoSeparator, "0 lies in the semigroup spanned by pos and -neg");
    }
    RationalVector f = primitive_integer(std::move(std::get<RationalVector>(result)));
    for (const auto& p : pos) ensure(dot(f, p) > 0, "separator fails on a positive vector");
    for (const auto& q : neg) ensure(dot(f, q) < 0, "separator fails on a negative vector");
    return f;
}

}  // namespace ordcone
