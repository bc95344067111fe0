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

#include "ordcone/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "ordcone/autact.hpp"
#include "ordcone/klein.hpp"
#include "ordcone/roots.hpp"

namespace ordcone {
namespace {

using Rng = std::mt19937_64;

// Tolerances: wall-clock limits per criterion, zero allowed failures.
constexpr double kGlLimitSeconds = 5.0;
constexpr double kCatalogLimitSeconds = 60.0;
constexpr double kKleinLimitSeconds = 2.0;

struct Outcome {
    bool passed;
    std::string detail;
};

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Word random_word(Rng& rng, int rank, int length) {
    std::vector<Letter> letters;
    while (static_cast<int>(letters.size()) < length) {
        Letter l = static_cast<Letter>(uniform(rng, 1, rank));
        if (uniform(rng, 0, 1) == 1) l = -l;
        if (!letters.empty() && letters.back() == -l) continue;
        letters.push_back(l);
    }
    return Word(rank, letters);
}

std::string count_detail(std::size_t ok, std::size_t total, const std::string& what) {
    std::ostringstream out;
    out << ok << "/" << total << " " << what;
    return out.str();
}

Endomorphism endo(int rank, const std::string& text) { return parse_endomorphism(text, rank); }

// ---------------------------------------------------------------------------

Outcome gl_faithfulness(Rng& rng) {
    std::size_t ok = 0, total = 0;
    std::string first_failure;
    for (int n : {2, 3}) {
        int made = 0;
        while (made < 200) {
            IntMatrix a(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n)));
            for (auto& row : a) {
                for (auto& x : row) x = uniform(rng, -3, 3);
            }
            const Rational det = determinant(RationalMatrix::from_ints(a));
            if (det != 1 && det != -1) continue;
            const IntegerAutomorphism m(a);
            if (m.is_identity()) continue;
            ++made;
            ++total;
            const GlWitness w = gl_witness(m);
            const IntVector image = m.apply(w.vector);
            const Sign before = flag_sign(w.flag, w.vector);
            const Sign after = flag_sign(w.flag, image);
            if (before == w.before && after == w.after && before != after && before != Sign::Zero &&
                after != Sign::Zero) {
                ++ok;
            } else if (first_failure.empty()) {
                first_failure = "witness failed re-check";
            }
        }
    }
    return {ok == total, count_detail(ok, total, "GL_2/GL_3 witnesses re-verified") + first_failure};
}

std::vector<IntVector> random_set(Rng& rng) {
    const std::size_t dim = static_cast<std::size_t>(uniform(rng, 2, 3));
    const std::size_t count = static_cast<std::size_t>(uniform(rng, 3, 5));
    std::vector<IntVector> vs;
    while (vs.size() < count) {
        IntVector v(dim);
        for (auto& x : v) x = uniform(rng, -4, 4);
        if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) vs.push_back(v);
    }
    return vs;
}

bool halfspace_holds(const Halfspace& h, const std::vector<IntVector>& vs) {
    for (const auto& v : vs) {
        Rational s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += h.functional[i] * static_cast<long>(v[i]);
        if (s <= 0) return false;
    }
    return true;
}

bool zero_combo_holds(const ZeroCombo& z, const std::vector<IntVector>& vs) {
    if (z.coefficients.size() != vs.size()) return false;
    bool nonzero = false;
    for (const auto& c : z.coefficients) {
        if (c < 0) return false;
        nonzero = nonzero || c != 0;
    }
    for (std::size_t k = 0; k < vs.front().size(); ++k) {
        Integer s = 0;
        for (std::size_t j = 0; j < vs.size(); ++j) s += z.coefficients[j] * static_cast<long>(vs[j][k]);
        if (s != 0) return false;
    }
    return nonzero;
}

Outcome halfspace_dichotomy(Rng& rng) {
    std::size_t ok = 0, halfspaces = 0;
    for (int t = 0; t < 500; ++t) {
        const auto vs = random_set(rng);
        std::vector<RationalVector> qs;
        for (const auto& v : vs) qs.push_back(to_rational(v));
        const ConeCertificate cert = classify_cone(qs);
        bool good = false;
        if (const auto* h = std::get_if<Halfspace>(&cert)) {
            ++halfspaces;
            good = halfspace_holds(*h, vs) && !oracle::small_zero_combination(vs, 8);
        } else {
            good = zero_combo_holds(std::get<ZeroCombo>(cert), vs);
        }
        ok += good ? 1 : 0;
    }
    return {ok == 500, count_detail(ok, 500, "certificates verified") + " (" + std::to_string(halfspaces) +
                           " half-spaces, none with a zero combination of weight <= 8)"};
}

Outcome density_realization(Rng& rng) {
    std::size_t ok = 0, realized = 0;
    for (int t = 0; t < 500; ++t) {
        const auto vs = random_set(rng);
        std::vector<RationalVector> qs;
        for (const auto& v : vs) qs.push_back(to_rational(v));
        const bool permitted = std::holds_alternative<Halfspace>(classify_cone(qs));
        bool good = false;
        try {
            const FlagOrdering f = realize_flag(vs);
            ++realized;
            good = permitted && std::all_of(vs.begin(), vs.end(), [&](const IntVector& v) {
                       return flag_sign(f, v) == Sign::Positive;
                   });
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoCone) throw;
            good = !permitted;
        }
        // A small zero combination rules out every flag.
        if (oracle::small_zero_combination(vs, 8) && permitted) good = false;
        ok += good ? 1 : 0;
    }
    return {ok == 500, count_detail(ok, 500, "sets agree with the dichotomy") + " (" + std::to_string(realized) +
                           " realized and sign-checked)"};
}

bool matches_naive(const Word& w, int cap) {
    const TruncatedSeries s = magnus(w, cap);
    std::size_t nonzero = 0;
    for (int k = 0; k <= cap; ++k) {
        for (auto c : s.degree(k)) nonzero += c != 0 ? 1 : 0;
    }
    const auto naive = oracle::naive_magnus(w, cap);
    if (naive.size() != nonzero) return false;
    for (const auto& [mono, c] : naive) {
        if (s.coefficient(mono) != c) return false;
    }
    return true;
}

Outcome magnus_soundness(Rng& rng) {
    std::size_t hom = 0, naive = 0;
    for (int t = 0; t < 200; ++t) {
        const Word u = random_word(rng, 2, static_cast<int>(uniform(rng, 0, 8)));
        const Word v = random_word(rng, 2, static_cast<int>(uniform(rng, 0, 8)));
        hom += magnus(u * v, 5) == magnus(u, 5) * magnus(v, 5) ? 1 : 0;
        naive += matches_naive(u, 5) ? 1 : 0;
    }
    const auto words = ball(2, 4, true);
    std::set<std::string> images;
    for (const auto& w : words) images.insert(magnus(w, 5).str());
    const bool injective = images.size() == words.size();

    bool ranks = true;
    std::string rank_list;
    const auto basis = hall_basis(2, 5);
    for (int k = 1; k <= 5; ++k) {
        ranks = ranks && basis->count(k) == oracle::witt(2, k);
        rank_list += (k > 1 ? "," : "") + std::to_string(basis->count(k));
    }
    std::ostringstream d;
    d << hom << "/200 products, " << naive << "/200 naive expansions, " << images.size() << "/" << words.size()
      << " distinct on the radius-4 ball, Hall ranks " << rank_list;
    return {hom == 200 && naive == 200 && injective && ranks, d.str()};
}

Endomorphism random_ia(Rng& rng, int n) {
    Endomorphism phi = Endomorphism::identity(n);
    const int factors = static_cast<int>(uniform(rng, 1, 4));
    for (int f = 0; f < factors; ++f) {
        const int kind = static_cast<int>(uniform(rng, 0, n == 2 ? 1 : 2));
        const int i = static_cast<int>(uniform(rng, 1, n));
        int j = static_cast<int>(uniform(rng, 1, n - 1));
        if (j >= i) ++j;
        const int e = uniform(rng, 0, 1) ? 1 : -1;
        const Word xj = Word::generator(n, j, e);
        std::vector<Word> images;
        for (int g = 1; g <= n; ++g) images.push_back(Word::generator(n, g));
        if (kind == 0) {
            for (auto& w : images) w = xj * w * xj.inverse();
        } else if (kind == 1) {
            images[static_cast<std::size_t>(i - 1)] = xj * images[static_cast<std::size_t>(i - 1)] * xj.inverse();
        } else {
            const int k = 6 - i - j;
            images[static_cast<std::size_t>(i - 1)] =
                images[static_cast<std::size_t>(i - 1)] * commutator(xj, Word::generator(n, k));
        }
        phi = phi.compose(Endomorphism(n, images));
    }
    return phi;
}

Outcome ia_triviality(Rng& rng) {
    std::size_t ok = 0;
    for (int t = 0; t < 50; ++t) {
        const int n = t < 25 ? 2 : 3;
        const Endomorphism phi = random_ia(rng, n);
        bool trivial = true;
        for (int level = 1; level <= 4; ++level) {
            const IntMatrix m = induced_matrix(phi, level, 4);
            for (std::size_t r = 0; r < m.size(); ++r) {
                for (std::size_t c = 0; c < m.size(); ++c) trivial = trivial && m[r][c] == (r == c ? 1 : 0);
            }
        }
        ok += trivial ? 1 : 0;
    }
    return {ok == 50, count_detail(ok, 50, "random inner/IA products act trivially on levels 1..4")};
}

Outcome witness_suite() {
    const auto catalog = automorphism_catalog();
    std::size_t ok = 0, kernel = 0;
    std::string failures;
    for (const auto& entry : catalog) {
        try {
            const OrderingWitness w = tm1_witness(entry.phi, 5);
            const Sign before = w.ordering().sign(w.word());
            const Sign after = w.ordering().sign(entry.phi.apply(w.word()));
            if (before == Sign::Positive && after == Sign::Negative && w.sign_before() == before &&
                w.sign_after() == after) {
                ++ok;
                kernel += w.ordering().is_standard() ? 0 : 1;
            } else {
                failures += " " + entry.name;
            }
        } catch (const Error& e) {
            failures += " " + entry.name + "(" + e.what() + ")";
        }
    }
    bool identity_rejected = false;
    for (int n : {2, 3}) {
        try {
            tm1_witness(Endomorphism::identity(n), 5);
        } catch (const Error& e) {
            identity_rejected = e.kind() == ErrorKind::IdentityAutomorphism;
        }
    }
    std::ostringstream d;
    d << ok << "/" << catalog.size() << " catalog witnesses verified (" << kernel
      << " through kernel orderings), identity " << (identity_rejected ? "rejected" : "NOT rejected") << failures;
    return {ok == catalog.size() && catalog.size() >= 20 && identity_rejected, d.str()};
}

Outcome separation_suite() {
    const auto words = ball(2, 3);
    std::size_t separated = 0, common = 0, bad = 0;
    std::string first_bad;
    for (const auto& g : words) {
        for (const auto& k : words) {
            if (g == k) continue;
            const bool shares = oracle::small_common_power(g, k, 3).has_value();
            bool good = false;
            try {
                const LeftOrdering s = separate(g, k, 5);
                good = !shares && s.sign(g) == Sign::Positive && s.sign(k) == Sign::Negative;
                separated += good ? 1 : 0;
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::CommonRoot) {
                    good = shares;
                    common += good ? 1 : 0;
                } else if (e.kind() != ErrorKind::DepthCapExceeded) {
                    throw;
                }
            }
            if (!good && bad++ == 0) first_bad = " first failure: (" + g.str() + ", " + k.str() + ")";
        }
    }
    std::ostringstream d;
    d << separated << " separated, " << common << " common roots, " << bad << " failures over "
      << words.size() * (words.size() - 1) << " ordered pairs" << first_bad;
    return {bad == 0, d.str()};
}

Outcome cone_axioms(Rng& rng) {
    const auto basis = hall_basis(2, 5);
    std::size_t ok = 0;
    std::size_t pairs = 0;
    for (int t = 0; t < 10; ++t) {
        std::vector<FlagOrdering> levels;
        for (int i = 1; i <= 5; ++i) {
            const std::size_t d = static_cast<std::size_t>(basis->count(i));
            while (true) {
                IntMatrix m(d, IntVector(d));
                for (auto& row : m) {
                    for (auto& x : row) x = uniform(rng, -3, 3);
                }
                const RationalMatrix q = RationalMatrix::from_ints(m);
                if (rank(q) == d) {
                    levels.emplace_back(q);
                    break;
                }
            }
        }
        const ConeReport r = verify_cone_axioms(StandardOrdering(2, 5, std::move(levels)), 3);
        ok += (r.passed && r.conjugation && r.skipped == 0) ? 1 : 0;
        pairs += r.pairs;
    }
    return {ok == 10, count_detail(ok, 10, "random standard orderings pass all four axioms") + " (" +
                          std::to_string(pairs) + " positive pairs checked)"};
}

Outcome boundary_suite() {
    const auto catalog = automorphism_catalog();
    std::size_t ok = 0;
    std::string failures;
    for (const auto& entry : catalog) {
        try {
            const Word g = boundary_separation(entry.phi);
            const Word image = entry.phi.apply(g);
            if (!common_power(g, image) && !oracle::small_common_power(g, image, 8)) {
                ++ok;
            } else {
                failures += " " + entry.name;
            }
        } catch (const Error& e) {
            failures += " " + entry.name + "(" + e.what() + ")";
        }
    }
    return {ok == catalog.size(), count_detail(ok, catalog.size(), "boundary certificates verified") + failures};
}

Outcome klein_suite() {
    const auto orderings = k_enumerate_orderings();
    bool cones = orderings.size() == 4;
    // Independent closure check on the box |a|, |b| <= 4.
    for (const auto& o : orderings) {
        for (std::int64_t a1 = -4; a1 <= 4; ++a1) {
            for (std::int64_t b1 = -4; b1 <= 4; ++b1) {
                const KleinElement p{a1, b1};
                if (p.is_identity()) continue;
                const bool pos_p = o.eps() * a1 > 0 || (a1 == 0 && o.delta() * b1 > 0);
                cones = cones && (k_sign(o, p) == Sign::Positive) == pos_p;
                for (std::int64_t a2 = -4; a2 <= 4 && pos_p; ++a2) {
                    for (std::int64_t b2 = -4; b2 <= 4; ++b2) {
                        const bool pos_q = o.eps() * a2 > 0 || (a2 == 0 && o.delta() * b2 > 0);
                        if (!pos_q) continue;
                        // x^a1 y^b1 x^a2 y^b2 = x^(a1+a2) y^(+-b1 + b2)
                        const std::int64_t a = a1 + a2;
                        const std::int64_t b = ((a2 % 2 == 0) ? b1 : -b1) + b2;
                        cones = cones && (o.eps() * a > 0 || (a == 0 && o.delta() * b > 0));
                    }
                }
            }
        }
    }
    std::set<std::pair<int, int>> distinct;
    for (const auto& o : orderings) distinct.insert({o.eps(), o.delta()});
    cones = cones && distinct.size() == 4;

    const OutTable t = k_out_table();
    bool alpha1_row = true;
    for (int j = 0; j < 4; ++j) alpha1_row = alpha1_row && t.action[1][j] == j;
    const bool alpha1_non_inner = !inner_conjugator(t.representatives[1]).has_value();
    const bool ok = cones && t.klein_four && t.pairwise_non_inner && alpha1_row && alpha1_non_inner &&
                    t.conj_y_fixes_all && t.conj_y_nontrivial;
    std::ostringstream d;
    d << (cones ? 4 : 0) << " verified cones, Out(K) " << (t.klein_four ? "= Z/2 x Z/2" : "NOT Z/2 x Z/2")
      << ", alpha1 " << (alpha1_row ? "fixes all orderings" : "moves an ordering") << " and is "
      << (alpha1_non_inner ? "non-inner" : "inner") << ", conjugation by y "
      << (t.conj_y_fixes_all && t.conj_y_nontrivial ? "fixes all cones and is nontrivial" : "FAILED");
    return {ok, d.str()};
}

struct CriterionDef {
    const char* title;
    std::optional<double> limit;
    std::function<Outcome(Rng&)> run;
};

const std::vector<CriterionDef>& criteria() {
    static const std::vector<CriterionDef> all{
        {"GL faithfulness", kGlLimitSeconds, gl_faithfulness},
        {"half-space dichotomy", std::nullopt, halfspace_dichotomy},
        {"density realization", std::nullopt, density_realization},
        {"Magnus soundness", std::nullopt, magnus_soundness},
        {"IA maps act trivially on graded quotients", std::nullopt, ia_triviality},
        {"automorphism witness suite", kCatalogLimitSeconds, [](Rng&) { return witness_suite(); }},
        {"separation suite", std::nullopt, [](Rng&) { return separation_suite(); }},
        {"cone axioms", std::nullopt, cone_axioms},
        {"boundary certificates", std::nullopt, [](Rng&) { return boundary_suite(); }},
        {"Klein bottle suite", kKleinLimitSeconds, [](Rng&) { return klein_suite(); }},
    };
    return all;
}

}  // namespace

std::vector<CatalogEntry> automorphism_catalog() {
    return {
        {"F2 right transvection x1 -> x1 x2", endo(2, "x1 -> x1 x2")},
        {"F2 left transvection x1 -> x2 x1", endo(2, "x1 -> x2 x1")},
        {"F2 transvection x1 -> x1 x2^-1", endo(2, "x1 -> x1 x2^-1")},
        {"F2 transvection x2 -> x2 x1", endo(2, "x2 -> x2 x1")},
        {"F2 transvection x2 -> x1^-1 x2", endo(2, "x2 -> x1^-1 x2")},
        {"F2 inversion of x1", endo(2, "x1 -> x1^-1")},
        {"F2 inversion of x2", endo(2, "x2 -> x2^-1")},
        {"F2 total inversion", endo(2, "x1 -> x1^-1 ; x2 -> x2^-1")},
        {"F2 swap", endo(2, "x1 -> x2 ; x2 -> x1")},
        {"F2 inner by x1", endo(2, "x2 -> x1 x2 x1^-1")},
        {"F2 inner by x1^-1", endo(2, "x2 -> x1^-1 x2 x1")},
        {"F2 inner by x2", endo(2, "x1 -> x2 x1 x2^-1")},
        {"F2 inner by x1 x2", endo(2, "x1 -> x1 x2 x1 x2^-1 x1^-1 ; x2 -> x1 x2 x1^-1")},
        {"F3 transvection x1 -> x1 x2", endo(3, "x1 -> x1 x2")},
        {"F3 transvection x3 -> x3 x1^-1", endo(3, "x3 -> x3 x1^-1")},
        {"F3 inversion of x2", endo(3, "x2 -> x2^-1")},
        {"F3 cyclic permutation", endo(3, "x1 -> x2 ; x2 -> x3 ; x3 -> x1")},
        {"F3 inner by x3", endo(3, "x1 -> x3 x1 x3^-1 ; x2 -> x3 x2 x3^-1")},
        {"F3 partial conjugation x1 -> x3 x1 x3^-1", endo(3, "x1 -> x3 x1 x3^-1")},
        {"F3 partial conjugation x2 -> x1^-1 x2 x1", endo(3, "x2 -> x1^-1 x2 x1")},
        {"F3 IA map x1 -> x1 [x2, x3]", endo(3, "x1 -> x1 x2 x3 x2^-1 x3^-1")},
        {"F3 IA map x3 -> x3 [x1, x2]", endo(3, "x3 -> x3 x1 x2 x1^-1 x2^-1")},
        {"F3 product x1 -> x1 x2, x2 -> x2 x3", endo(3, "x1 -> x1 x2 ; x2 -> x2 x3")},
    };
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
    const auto& all = criteria();
    if (id < 1 || id > static_cast<int>(all.size())) fail(ErrorKind::Parse, "criterion id out of range");
    const CriterionDef& def = all[static_cast<std::size_t>(id - 1)];
    Rng rng(seed + static_cast<std::uint64_t>(id));
    CriterionResult r;
    r.id = id;
    r.title = def.title;
    r.limit_seconds = def.limit;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome o = def.run(rng);
        r.passed = o.passed;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("unexpected error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.limit_seconds && r.seconds > *r.limit_seconds) {
        r.passed = false;
        r.detail += "; over the time limit";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= static_cast<int>(criteria().size()); ++id) out.push_back(run_criterion(id, seed));
    return out;
}

Json to_json(const CriterionResult& r) {
    Json j{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}};
    if (r.limit_seconds) j["limit_seconds"] = *r.limit_seconds;
    return j;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << ": " << r.detail << " (" << r.seconds
        << "s";
    if (r.limit_seconds) out << " / limit " << *r.limit_seconds << "s";
    out << ")";
    return out.str();
}

}  // namespace ordcone
