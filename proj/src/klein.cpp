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

#include "ordcone/klein.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace ordcone {
namespace {

std::int64_t parity_sign(std::int64_t a) { return (a % 2 == 0) ? 1 : -1; }

std::string power(char g, std::int64_t e) {
    std::string s(1, g);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

std::vector<KleinElement> box(int radius, bool with_identity) {
    std::vector<KleinElement> out;
    for (std::int64_t a = -radius; a <= radius; ++a) {
        for (std::int64_t b = -radius; b <= radius; ++b) {
            if (with_identity || a != 0 || b != 0) out.push_back({a, b});
        }
    }
    return out;
}

std::string trim(std::string_view s) {
    std::size_t lo = 0, hi = s.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
    return std::string(s.substr(lo, hi - lo));
}

// Sign assignments on a box, closed under products that stay inside it.
class BoxSolver {
public:
    explicit BoxSolver(int radius) : radius_(radius), elems_(box(radius, false)) {
        const std::size_t n = elems_.size();
        inv_.resize(n);
        prod_.assign(n, std::vector<int>(n, -1));
        for (std::size_t i = 0; i < n; ++i) {
            inv_[i] = index(k_inverse(elems_[i]));
            for (std::size_t j = 0; j < n; ++j) prod_[i][j] = index(k_mul(elems_[i], elems_[j]));
        }
        sign_.assign(n, 0);
    }

    int index(const KleinElement& p) const {
        if (p.is_identity() || std::abs(p.a) > radius_ || std::abs(p.b) > radius_) return -1;
        const std::int64_t side = 2 * radius_ + 1;
        std::int64_t k = (p.a + radius_) * side + (p.b + radius_);
        const std::int64_t centre = radius_ * side + radius_;
        if (k > centre) --k;
        return static_cast<int>(k);
    }

    const std::vector<KleinElement>& elements() const { return elems_; }
    int sign(std::size_t i) const { return sign_[i]; }

    // Sets p positive and propagates; returns false on a contradiction. The
    // trail length before the call is the undo point.
    bool assume_positive(int p) {
        std::vector<int> queue{p};
        while (!queue.empty()) {
            const int x = queue.back();
            queue.pop_back();
            if (sign_[x] == 1) continue;
            if (sign_[x] == -1) return false;
            set(x, 1);
            set(inv_[x], -1);
            for (std::size_t q = 0; q < elems_.size(); ++q) {
                if (sign_[q] != 1) continue;
                for (const int r : {prod_[x][q], prod_[q][x]}) {
                    if (r < 0) {
                        continue;
                    }
                    if (sign_[r] == -1) return false;
                    if (sign_[r] == 0) queue.push_back(r);
                }
            }
        }
        return true;
    }

    std::size_t mark() const { return trail_.size(); }
    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            sign_[trail_.back()] = 0;
            trail_.pop_back();
        }
    }

    // Depth-first completion; `leaf` returns true to stop the search.
    bool search(const std::function<bool()>& leaf) {
        std::size_t next = 0;
        while (next < elems_.size() && sign_[next] != 0) ++next;
        if (next == elems_.size()) return leaf();
        for (const bool positive : {true, false}) {
            const std::size_t m = mark();
            const int target = positive ? static_cast<int>(next) : inv_[next];
            if (assume_positive(target) && search(leaf)) {
                undo(m);
                return true;
            }
            undo(m);
        }
        return false;
    }

private:
    void set(int i, int s) {
        if (sign_[i] == 0) {
            sign_[i] = static_cast<signed char>(s);
            trail_.push_back(i);
        }
    }

    int radius_;
    std::vector<KleinElement> elems_;
    std::vector<int> inv_;
    std::vector<std::vector<int>> prod_;
    std::vector<signed char> sign_;
    std::vector<int> trail_;
};

int ordering_index(const KleinOrdering& o) { return (o.eps() > 0 ? 0 : 2) + (o.delta() > 0 ? 0 : 1); }

}  // namespace

std::string KleinElement::str() const {
    if (is_identity()) return "1";
    std::string s;
    if (a != 0) s += power('x', a);
    if (b != 0) s += (s.empty() ? "" : " ") + power('y', b);
    return s;
}

KleinElement k_mul(const KleinElement& p, const KleinElement& q) { return {p.a + q.a, parity_sign(q.a) * p.b + q.b}; }

KleinElement k_inverse(const KleinElement& p) { return {-p.a, -parity_sign(p.a) * p.b}; }

KleinElement k_pow(const KleinElement& p, std::int64_t e) {
    if (e < 0) return k_pow(k_inverse(p), -e);
    if (p.a % 2 == 0) return {e * p.a, e * p.b};
    // (x^a y^b)^2 = x^2a when a is odd.
    return {e * p.a, e % 2 == 0 ? 0 : p.b};
}

KleinElement parse_klein_element(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) fail(ErrorKind::Parse, "empty Klein element");
    if (s == "1") return {};
    KleinElement out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        const char g = s[i++];
        if (g != 'x' && g != 'y') fail(ErrorKind::Parse, "expected x or y in '" + s + "'");
        std::int64_t e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            std::size_t used = 0;
            try {
                e = std::stoll(s.substr(i), &used);
            } catch (const std::exception&) {
                fail(ErrorKind::Parse, "bad exponent in '" + s + "'");
            }
            i += used;
        }
        out = k_mul(out, g == 'x' ? KleinElement{e, 0} : KleinElement{0, e});
    }
    return out;
}

KleinOrdering::KleinOrdering(int eps, int delta) : eps_(eps), delta_(delta) {
    if ((eps != 1 && eps != -1) || (delta != 1 && delta != -1)) fail(ErrorKind::Parse, "eps and delta must be +-1");
}

std::string KleinOrdering::str() const {
    return std::string("(") + (eps_ > 0 ? '+' : '-') + "," + (delta_ > 0 ? '+' : '-') + ")";
}

Sign k_sign(const KleinOrdering& o, const KleinElement& p) {
    if (p.is_identity()) fail(ErrorKind::IdentityElement, "the identity has no sign");
    if (p.a != 0) return sign_of(o.eps() * p.a);
    return sign_of(o.delta() * p.b);
}

bool k_verify_cone(const KleinOrdering& o, int radius) {
    const auto elems = box(radius, false);
    std::vector<KleinElement> positives;
    for (const auto& p : elems) {
        const Sign s = k_sign(o, p);
        if (s == Sign::Zero || k_sign(o, k_inverse(p)) != negate(s)) return false;
        if (s == Sign::Positive) positives.push_back(p);
    }
    for (const auto& p : positives) {
        for (const auto& q : positives) {
            const KleinElement pq = k_mul(p, q);
            if (pq.is_identity() || k_sign(o, pq) != Sign::Positive) return false;
        }
    }
    return true;
}

std::vector<KleinOrdering> k_enumerate_orderings() {
    std::vector<KleinOrdering> out;
    for (int eps : {1, -1}) {
        for (int delta : {1, -1}) {
            KleinOrdering o(eps, delta);
            ensure(k_verify_cone(o, 4), "Klein cone fails its axioms");
            out.push_back(o);
        }
    }
    return out;
}

KleinAut::KleinAut(KleinElement x_image, KleinElement y_image) : x_(x_image), y_(y_image) {
    if (!(k_mul(k_mul(k_inverse(x_), y_), x_) == k_inverse(y_))) {
        fail(ErrorKind::InvalidAutomorphism, "images " + x_.str() + ", " + y_.str() + " break x^-1 y x = y^-1");
    }
    if (!preimages()) fail(ErrorKind::InvalidAutomorphism, "no inverse with images in |a|, |b| <= 8");
}

std::optional<std::pair<KleinElement, KleinElement>> KleinAut::preimages() const {
    // Automorphisms have the shape x -> x^eps y^s, y -> y^delta, with inverse
    // images x^eps y^(-s delta) and y^delta; try that before searching.
    if (std::abs(x_.a) == 1 && y_.a == 0 && std::abs(y_.b) == 1) {
        const KleinElement px{x_.a, -x_.b * y_.b};
        const KleinElement py{0, y_.b};
        if (apply(px) == KleinElement{1, 0} && apply(py) == KleinElement{0, 1}) return std::make_pair(px, py);
    }
    std::optional<KleinElement> px, py;
    for (const auto& p : box(8, false)) {
        const KleinElement q = apply(p);
        if (!px && q == KleinElement{1, 0}) px = p;
        if (!py && q == KleinElement{0, 1}) py = p;
        if (px && py) return std::make_pair(*px, *py);
    }
    return std::nullopt;
}

// Surjective endomorphisms of K are automorphisms (K is Hopfian), so the
// preimages of x and y define the inverse.
KleinAut KleinAut::inverse() const {
    const auto pre = preimages();
    ensure(pre.has_value(), "validated automorphism without preimages");
    return KleinAut(pre->first, pre->second);
}

KleinAut KleinAut::conjugation(const KleinElement& g) {
    const KleinElement gi = k_inverse(g);
    return KleinAut(k_mul(k_mul(g, {1, 0}), gi), k_mul(k_mul(g, {0, 1}), gi));
}

KleinElement KleinAut::apply(const KleinElement& p) const { return k_mul(k_pow(x_, p.a), k_pow(y_, p.b)); }

KleinAut KleinAut::compose(const KleinAut& inner) const { return KleinAut(apply(inner.x_), apply(inner.y_)); }

std::string KleinAut::str() const { return "x -> " + x_.str() + " ; y -> " + y_.str(); }

KleinAut parse_klein_aut(std::string_view text) {
    KleinElement xi{1, 0}, yi{0, 1};
    std::stringstream in{std::string(text)};
    std::string clause;
    while (std::getline(in, clause, ';')) {
        const std::string c = trim(clause);
        if (c.empty()) continue;
        const auto arrow = c.find("->");
        if (arrow == std::string::npos) fail(ErrorKind::Parse, "expected 'g -> word' in '" + c + "'");
        const std::string lhs = trim(std::string_view(c).substr(0, arrow));
        const KleinElement rhs = parse_klein_element(std::string_view(c).substr(arrow + 2));
        if (lhs == "x") {
            xi = rhs;
        } else if (lhs == "y") {
            yi = rhs;
        } else {
            fail(ErrorKind::Parse, "unknown generator '" + lhs + "'");
        }
    }
    return KleinAut(xi, yi);
}

KleinOrdering k_pull(const KleinAut& phi, const KleinOrdering& o) {
    const KleinOrdering pulled(static_cast<int>(k_sign(o, phi.x_image())), static_cast<int>(k_sign(o, phi.y_image())));
    for (const auto& p : box(3, false)) {
        ensure(k_sign(pulled, p) == k_sign(o, phi.apply(p)), "pulled ordering is not among the four cones");
    }
    return pulled;
}

std::optional<KleinElement> inner_conjugator(const KleinAut& phi, int bound) {
    for (const auto& g : box(bound, true)) {
        if (KleinAut::conjugation(g) == phi) return g;
    }
    return std::nullopt;
}

bool is_inner_closed_form(const KleinAut& phi) {
    return phi.x_image().a == 1 && phi.x_image().b % 2 == 0;
}

OutTable k_out_table() {
    const KleinAut id = KleinAut::identity();
    const KleinAut alpha1({1, 1}, {0, 1});
    const KleinAut alpha2(k_mul({0, 1}, {1, 0}), {0, 1});
    const KleinAut alpha3({-1, 0}, {0, -1});
    OutTable t{.names = {"id", "alpha1", "alpha3", "alpha1 alpha3"},
               .representatives = {id, alpha1, alpha3, alpha1.compose(alpha3)}};

    auto inner = [](const KleinAut& phi) {
        const bool searched = inner_conjugator(phi).has_value();
        ensure(searched == is_inner_closed_form(phi), "inner-ness tests disagree");
        return searched;
    };
    auto differ_by_inner = [&](const KleinAut& p, const KleinAut& q) { return inner(p.compose(q.inverse())); };

    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const KleinAut prod = t.representatives[i].compose(t.representatives[j]);
            int cls = -1;
            for (int k = 0; k < 4; ++k) {
                if (differ_by_inner(prod, t.representatives[k])) {
                    ensure(cls < 0, "product lies in two outer classes");
                    cls = k;
                }
            }
            ensure(cls >= 0, "product lies in no listed outer class");
            t.product[i][j] = cls;
        }
    }
    bool abelian = true, exponent_two = true;
    for (int i = 0; i < 4; ++i) {
        exponent_two = exponent_two && t.product[i][i] == 0;
        for (int j = 0; j < 4; ++j) abelian = abelian && t.product[i][j] == t.product[j][i];
    }
    t.klein_four = abelian && exponent_two;

    t.pairwise_non_inner = true;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j && differ_by_inner(t.representatives[i], t.representatives[j])) t.pairwise_non_inner = false;
        }
    }
    t.alpha1_alpha2_inner = differ_by_inner(alpha1, alpha2);

    const auto orderings = k_enumerate_orderings();
    for (int i = 0; i < 4; ++i) {
        bool trivial = true;
        for (int j = 0; j < 4; ++j) {
            t.action[i][j] = ordering_index(k_pull(t.representatives[i], orderings[j]));
            trivial = trivial && t.action[i][j] == j;
        }
        if (trivial) t.kernel.push_back(i);
    }

    const KleinAut conj_y = KleinAut::conjugation({0, 1});
    t.conj_y_nontrivial = !conj_y.is_identity();
    t.conj_y_fixes_all = true;
    for (const auto& o : orderings) t.conj_y_fixes_all = t.conj_y_fixes_all && k_pull(conj_y, o) == o;

    // Inner automorphisms are generated by conjugation by x and y.
    const std::array<KleinAut, 2> gens{KleinAut::conjugation({1, 0}), conj_y};
    std::array<int, 4> orbit{-1, -1, -1, -1};
    for (int start = 0; start < 4; ++start) {
        if (orbit[start] >= 0) continue;
        const int id_orbit = static_cast<int>(t.conjugation_orbits.size());
        t.conjugation_orbits.push_back({});
        std::vector<int> stack{start};
        orbit[start] = id_orbit;
        while (!stack.empty()) {
            const int j = stack.back();
            stack.pop_back();
            t.conjugation_orbits.back().push_back(j);
            for (const auto& c : gens) {
                const int next = ordering_index(k_pull(c, orderings[j]));
                if (orbit[next] < 0) {
                    orbit[next] = id_orbit;
                    stack.push_back(next);
                }
            }
        }
        std::sort(t.conjugation_orbits.back().begin(), t.conjugation_orbits.back().end());
    }
    return t;
}

LocalSearchReport k_local_search(int radius, int extend_radius) {
    LocalSearchReport report{radius, extend_radius, 0, 0};
    BoxSolver small(radius);
    BoxSolver large(extend_radius);
    small.search([&] {
        ++report.locally_consistent;
        const std::size_t m = large.mark();
        bool ok = true;
        for (std::size_t i = 0; i < small.elements().size() && ok; ++i) {
            if (small.sign(i) == 1) ok = large.assume_positive(large.index(small.elements()[i]));
        }
        if (ok && large.search([] { return true; })) ++report.extendable;
        large.undo(m);
        return false;
    });
    return report;
}

}  // namespace ordcone
