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

#include "ordcone/stdord.hpp"

#include <algorithm>
#include <set>

#include "ordcone/roots.hpp"

namespace ordcone {
namespace {

void check_class(int cls) {
    if (cls < 1 || cls > kMaxClass) fail(ErrorKind::LevelExceedsCap, "class must lie in 1.." + std::to_string(kMaxClass));
}

void check_rank(int expected, const Word& w) {
    if (w.rank() != expected) fail(ErrorKind::RankMismatch, "word rank does not match the ordering");
}

std::int64_t to_int64(const Rational& q) {
    ensure(q.get_den() == 1 && q.get_num().fits_slong_p(), "expected a machine integer");
    return q.get_num().get_si();
}

// Standard ordering whose level-i flag makes every vector in positives[i] positive.
StandardOrdering realize_levels(int rank, int cls, const std::map<int, std::vector<IntVector>>& positives) {
    const auto basis = hall_basis(rank, cls);
    std::vector<FlagOrdering> levels;
    for (int i = 1; i <= cls; ++i) {
        auto it = positives.find(i);
        if (it == positives.end()) {
            levels.push_back(FlagOrdering::identity(static_cast<std::size_t>(basis->count(i))));
        } else {
            levels.push_back(realize_flag(it->second));
        }
    }
    return StandardOrdering(rank, cls, std::move(levels));
}

FlagOrdering flag_from_functional(const RationalVector& f) {
    return FlagOrdering(RationalMatrix(complete_to_basis({f}, f.size())));
}

IntVector negated(IntVector v) {
    for (auto& x : v) x = -x;
    return v;
}

IntMatrix drop_coordinate(int n, int j) {
    IntMatrix psi;
    for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        IntVector row(static_cast<std::size_t>(n), 0);
        row[static_cast<std::size_t>(i)] = 1;
        psi.push_back(std::move(row));
    }
    return psi;
}

// Integer rows spanning the orthogonal complement of u.
IntMatrix complement_map(const IntVector& u) {
    IntMatrix psi;
    for (auto& v : kernel_basis(RationalMatrix({to_rational(u)}))) {
        IntVector row;
        for (const auto& q : primitive_integer(std::move(v))) row.push_back(to_int64(q));
        psi.push_back(std::move(row));
    }
    return psi;
}

struct KernelCandidate {
    std::map<FoxKey, Rational> functional;
    std::optional<std::pair<const Word*, Sign>> tail_constraint;
};

// Tries to separate g (positive) from k (negative) inside M / [M, M] for M = ker(psi o ab).
std::optional<KernelCandidate> separate_in_kernel(const Word& g, const Word& k, const IntMatrix& psi) {
    const FoxVector dg = fox_vector(g, psi);
    const FoxVector dk = fox_vector(k, psi);
    KernelCandidate out;
    if (dg.empty() && dk.empty()) return std::nullopt;
    if (dg.empty()) {
        for (const auto& [key, c] : dk) out.functional[key] = -c;
        out.tail_constraint = std::make_pair(&g, Sign::Positive);
        return out;
    }
    if (dk.empty()) {
        for (const auto& [key, c] : dg) out.functional[key] = c;
        out.tail_constraint = std::make_pair(&k, Sign::Negative);
        return out;
    }
    std::set<FoxKey> keys;
    for (const auto& kv : dg) keys.insert(kv.first);
    for (const auto& kv : dk) keys.insert(kv.first);
    const std::vector<FoxKey> order(keys.begin(), keys.end());
    auto embed = [&](const FoxVector& d) {
        RationalVector v;
        for (const auto& key : order) {
            auto it = d.find(key);
            v.emplace_back(it == d.end() ? 0 : it->second);
        }
        return v;
    };
    const std::vector<RationalVector> pos{embed(dg)};
    const std::vector<RationalVector> neg{embed(dk)};
    try {
        const RationalVector f = strict_separator(pos, neg);
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (f[i] != 0) out.functional[order[i]] = f[i];
        }
        return out;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoSeparator) throw;
        return std::nullopt;
    }
}

}  // namespace

StandardOrdering::StandardOrdering(int rank, int cls, std::vector<FlagOrdering> levels)
    : rank_(rank), cls_(cls), levels_(std::move(levels)) {
    if (rank_ < 1) fail(ErrorKind::RankMismatch, "rank must be positive");
    check_class(cls_);
    if (levels_.size() != static_cast<std::size_t>(cls_)) {
        fail(ErrorKind::DimensionMismatch, "need one flag per level");
    }
    const auto basis = hall_basis(rank_, cls_);
    for (int i = 1; i <= cls_; ++i) {
        if (level(i).dim() != static_cast<std::size_t>(basis->count(i))) {
            fail(ErrorKind::DimensionMismatch, "level " + std::to_string(i) + " needs dimension " +
                                                   std::to_string(basis->count(i)));
        }
    }
}

StandardOrdering StandardOrdering::identity(int rank, int cls) { return realize_levels(rank, cls, {}); }

Sign StandardOrdering::sign(const Word& w) const {
    check_rank(rank_, w);
    const LeadingCoords lc = leading_coords(w, cls_);
    const Sign s = level(lc.depth).sign(lc.coords);
    ensure(s != Sign::Zero, "leading coordinates vanish");
    return s;
}

StandardOrdering StandardOrdering::opposite() const {
    std::vector<FlagOrdering> flipped;
    for (const auto& f : levels_) flipped.push_back(f.opposite());
    return StandardOrdering(rank_, cls_, std::move(flipped));
}

Sign std_sign(const StandardOrdering& s, const Word& w) { return s.sign(w); }

FoxVector fox_vector(const Word& w, const IntMatrix& psi) {
    const std::size_t m = psi.size();
    IntVector shift(m, 0);
    FoxVector d;
    auto add = [&](int g, std::int64_t c) {
        auto [it, inserted] = d.try_emplace(FoxKey{g, shift}, 0);
        it->second += c;
        if (it->second == 0) d.erase(it);
    };
    auto move = [&](int g, std::int64_t dir) {
        for (std::size_t r = 0; r < m; ++r) shift[r] += dir * psi[r].at(static_cast<std::size_t>(g - 1));
    };
    for (const Letter l : w.letters()) {
        const int g = std::abs(l);
        if (l > 0) {
            add(g, 1);
            move(g, 1);
        } else {
            move(g, -1);
            add(g, -1);
        }
    }
    return d;
}

KernelOrdering::KernelOrdering(IntMatrix psi, FlagOrdering quotient, std::map<FoxKey, Rational> functional,
                               StandardOrdering tail, int tie_sign)
    : psi_(std::move(psi)),
      quotient_(std::move(quotient)),
      functional_(std::move(functional)),
      tail_(std::move(tail)),
      tie_sign_(tie_sign) {
    const std::size_t n = static_cast<std::size_t>(tail_.rank());
    if (psi_.empty() || quotient_.dim() != psi_.size()) {
        fail(ErrorKind::DimensionMismatch, "quotient flag must match the rows of psi");
    }
    for (const auto& row : psi_) {
        if (row.size() != n) fail(ErrorKind::DimensionMismatch, "psi must have one column per generator");
    }
    for (const auto& [key, c] : functional_) {
        if (key.generator < 1 || key.generator > tail_.rank() || key.shift.size() != psi_.size()) {
            fail(ErrorKind::DimensionMismatch, "functional key out of range");
        }
    }
    if (tie_sign_ != 1 && tie_sign_ != -1) fail(ErrorKind::DimensionMismatch, "tie sign must be +1 or -1");
}

Sign KernelOrdering::sign(const Word& w) const {
    check_rank(rank(), w);
    if (w.empty()) fail(ErrorKind::EmptyWord, "the identity has no sign");
    const IntVector ab = w.abelianization();
    IntVector q(psi_.size(), 0);
    for (std::size_t r = 0; r < psi_.size(); ++r) {
        for (std::size_t j = 0; j < ab.size(); ++j) q[r] += psi_[r][j] * ab[j];
    }
    if (std::any_of(q.begin(), q.end(), [](std::int64_t x) { return x != 0; })) return quotient_.sign(q);

    const FoxVector d = fox_vector(w, psi_);
    if (d.empty()) return tail_.sign(w);
    Rational value = 0;
    for (const auto& [key, c] : d) {
        auto it = functional_.find(key);
        if (it != functional_.end()) value += it->second * static_cast<long>(c);
    }
    if (value != 0) return sign_of(value);
    const Sign lead = sign_of(d.begin()->second);
    return tie_sign_ > 0 ? lead : negate(lead);
}

KernelOrdering KernelOrdering::opposite() const {
    std::map<FoxKey, Rational> f;
    for (const auto& [key, c] : functional_) f.emplace(key, -c);
    return KernelOrdering(psi_, quotient_.opposite(), std::move(f), tail_.opposite(), -tie_sign_);
}

int LeftOrdering::rank() const {
    return is_standard() ? standard().rank() : kernel().rank();
}

int LeftOrdering::cls() const { return is_standard() ? standard().cls() : kernel().cls(); }

Sign LeftOrdering::sign(const Word& w) const { return is_standard() ? standard().sign(w) : kernel().sign(w); }

LeftOrdering LeftOrdering::opposite() const {
    if (is_standard()) return standard().opposite();
    return kernel().opposite();
}

Comparison compare(const LeftOrdering& s, const Word& g, const Word& h) {
    const Word x = g.inverse() * h;
    if (x.empty()) return Comparison::Equal;
    return s.sign(x) == Sign::Positive ? Comparison::Less : Comparison::Greater;
}

StandardOrdering pullback(int rank, std::vector<FlagOrdering> quotient_levels, std::vector<FlagOrdering> tail) {
    const int j = static_cast<int>(quotient_levels.size()) + 1;
    std::vector<FlagOrdering> levels = quotient_levels;
    levels.insert(levels.end(), tail.begin(), tail.end());
    const int cls = static_cast<int>(levels.size());
    StandardOrdering out(rank, cls, std::move(levels));

    // Words surviving in F / gamma_j are signed by the quotient data alone.
    for (const Word& w : ball(rank, 2)) {
        const auto depth = lcs_depth(w, cls);
        if (!depth || *depth >= j) continue;
        const LeadingCoords lc = leading_coords(w, cls);
        ensure(out.sign(w) == quotient_levels[static_cast<std::size_t>(*depth - 1)].sign(lc.coords),
               "pullback disagrees with the quotient ordering");
    }
    return out;
}

ConeReport verify_cone_axioms(const LeftOrdering& s, int radius, std::optional<bool> require_conjugation) {
    ConeReport report;
    report.radius = radius;
    report.conjugation_required = require_conjugation.value_or(s.is_standard());
    const int n = s.rank();

    std::map<Word, std::optional<Sign>> memo;
    auto sign_of_word = [&](const Word& w) -> std::optional<Sign> {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        std::optional<Sign> out;
        try {
            out = s.sign(w);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DepthExceedsCap) throw;
        }
        memo.emplace(w, out);
        return out;
    };
    auto record = [&](bool& flag, const char* axiom, const Word& a, const Word& b) {
        if (flag) {
            flag = false;
            if (report.failed_axiom.empty()) {
                report.failed_axiom = axiom;
                report.counterexample = std::make_pair(a, b);
            }
        }
    };

    const std::vector<Word> words = ball(n, radius);
    report.words = words.size();
    std::vector<Word> positives;
    for (const Word& w : words) {
        const auto sw = sign_of_word(w);
        if (!sw) {
            ++report.skipped;
            continue;
        }
        if (*sw == Sign::Zero) record(report.totality, "totality", w, w);
        const auto si = sign_of_word(w.inverse());
        if (si && *si != negate(*sw)) record(report.antisymmetry, "antisymmetry", w, w.inverse());
        if (*sw == Sign::Positive) positives.push_back(w);
        for (int g = 1; g <= n; ++g) {
            const Word x = Word::generator(n, g);
            for (const Word& c : {x, x.inverse()}) {
                const auto sc = sign_of_word(c * w * c.inverse());
                if (!sc) {
                    ++report.skipped;
                } else if (*sc != *sw) {
                    record(report.conjugation, "conjugation", c, w);
                }
            }
        }
    }
    for (const Word& a : positives) {
        for (const Word& b : positives) {
            ++report.pairs;
            const auto sab = sign_of_word(a * b);
            if (!sab) {
                ++report.skipped;
            } else if (*sab != Sign::Positive) {
                record(report.closure, "closure", a, b);
            }
        }
    }
    report.passed = report.totality && report.antisymmetry && report.closure &&
                    (report.conjugation || !report.conjugation_required);
    if (report.passed && !report.conjugation) {
        report.failed_axiom.clear();
        report.counterexample.reset();
    }
    return report;
}

int ball_distance(const LeftOrdering& a, const LeftOrdering& b, int r_max) {
    if (a.rank() != b.rank()) fail(ErrorKind::RankMismatch, "orderings live on different free groups");
    const std::vector<Word> words = ball(a.rank(), r_max);
    int agreed = r_max;
    for (const Word& w : words) {
        const int len = static_cast<int>(w.size());
        if (len > agreed) break;
        if (a.sign(w) != b.sign(w)) agreed = len - 1;
    }
    return agreed;
}

LeftOrdering separate(const Word& g, const Word& k, int c_max) {
    check_class(c_max);
    if (g.empty() || k.empty()) fail(ErrorKind::EmptyWord, "cannot separate the identity");
    if (g.rank() != k.rank()) fail(ErrorKind::RankMismatch, "words live in different free groups");
    if (primitive_root(g).root == primitive_root(k).root) {
        fail(ErrorKind::CommonRoot, g.str() + " and " + k.str() + " share a common power");
    }
    const int n = g.rank();

    auto verified = [&](LeftOrdering s) {
        ensure(s.sign(g) == Sign::Positive && s.sign(k) == Sign::Negative, "separating ordering failed its check");
        return s;
    };

    const auto dg = lcs_depth(g, c_max);
    const auto dk = lcs_depth(k, c_max);
    std::optional<int> shared_depth;
    if (dg && dk) {
        const LeadingCoords lg = leading_coords(g, c_max);
        const LeadingCoords lk = leading_coords(k, c_max);
        if (*dg != *dk) {
            return verified(realize_levels(n, c_max, {{*dg, {lg.coords}}, {*dk, {negated(lk.coords)}}}));
        }
        const std::vector<RationalVector> pos{to_rational(lg.coords)};
        const std::vector<RationalVector> neg{to_rational(lk.coords)};
        try {
            const FlagOrdering flag = flag_from_functional(strict_separator(pos, neg));
            std::vector<FlagOrdering> levels = StandardOrdering::identity(n, c_max).levels();
            levels[static_cast<std::size_t>(*dg - 1)] = flag;
            return verified(StandardOrdering(n, c_max, std::move(levels)));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoSeparator) throw;
        }
        shared_depth = *dg;
    }

    // Positively proportional leading terms: every standard ordering signs g
    // and k alike, so pass to a kernel ordering.
    std::vector<IntMatrix> candidates;
    if (shared_depth == 1) {
        candidates.push_back(complement_map(g.abelianization()));
    } else if (n >= 2) {
        for (int j = n - 1; j >= 0; --j) candidates.push_back(drop_coordinate(n, j));
    }
    for (const IntMatrix& psi : candidates) {
        const auto found = separate_in_kernel(g, k, psi);
        if (!found) continue;
        std::map<int, std::vector<IntVector>> tail_constraints;
        if (found->tail_constraint) {
            const auto& [w, sign] = *found->tail_constraint;
            if (!lcs_depth(*w, c_max)) continue;
            const LeadingCoords lc = leading_coords(*w, c_max);
            tail_constraints[lc.depth].push_back(sign == Sign::Positive ? lc.coords : negated(lc.coords));
        }
        KernelOrdering ko(psi, FlagOrdering::identity(psi.size()), found->functional,
                          realize_levels(n, c_max, tail_constraints));
        return verified(std::move(ko));
    }
    fail(ErrorKind::DepthCapExceeded, "no ordering of class " + std::to_string(c_max) + " separates " + g.str() +
                                          " from " + k.str());
}

}  // namespace ordcone
