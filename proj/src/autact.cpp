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

#include "ordcone/autact.hpp"

namespace ordcone {
namespace {

bool is_inverse(const Endomorphism& phi, const Endomorphism& inv) {
    return phi.compose(inv).is_identity() && inv.compose(phi).is_identity();
}

// Greedy Nielsen reduction of the image tuple. Every move is a precomposition
// phi -> phi o nu with nu elementary, accumulated in `nu`.
std::optional<Endomorphism> nielsen_inverse(const Endomorphism& phi) {
    const int n = phi.rank();
    std::vector<Word> u = phi.images();
    Endomorphism nu = Endomorphism::identity(n);
    for (bool improved = true; improved;) {
        improved = false;
        for (int i = 0; i < n && !improved; ++i) {
            for (int j = 0; j < n && !improved; ++j) {
                if (i == j) continue;
                for (int e : {1, -1}) {
                    const Word xj = Word::generator(n, j + 1, e);
                    for (bool right : {true, false}) {
                        const Word& ui = u[static_cast<std::size_t>(i)];
                        const Word& uj = u[static_cast<std::size_t>(j)];
                        const Word candidate = right ? ui * uj.pow(e) : uj.pow(e) * ui;
                        if (candidate.size() >= ui.size()) continue;
                        std::vector<Word> images;
                        for (int g = 1; g <= n; ++g) images.push_back(Word::generator(n, g));
                        const Word xi = images[static_cast<std::size_t>(i)];
                        images[static_cast<std::size_t>(i)] = right ? xi * xj : xj * xi;
                        nu = nu.compose(Endomorphism(n, images));
                        u[static_cast<std::size_t>(i)] = candidate;
                        improved = true;
                        break;
                    }
                    if (improved) break;
                }
            }
        }
    }
    // phi o nu must now send each generator to a signed generator.
    std::vector<Word> sigma_inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Word& ui = u[static_cast<std::size_t>(i)];
        if (ui.size() != 1) return std::nullopt;
        const Letter l = ui.letters()[0];
        auto& slot = sigma_inv[static_cast<std::size_t>(std::abs(l) - 1)];
        if (!slot.empty()) return std::nullopt;
        slot = Word::generator(n, i + 1, l > 0 ? 1 : -1);
    }
    Endomorphism inv = nu.compose(Endomorphism(n, sigma_inv));
    if (!is_inverse(phi, inv)) return std::nullopt;
    return inv;
}

std::optional<Endomorphism> brute_force_inverse(const Endomorphism& phi, int max_length) {
    const int n = phi.rank();
    std::vector<Word> images(static_cast<std::size_t>(n));
    std::vector<bool> found(static_cast<std::size_t>(n), false);
    int remaining = n;
    for (const Word& v : ball(n, max_length)) {
        const Word image = phi.apply(v);
        if (image.size() != 1) continue;
        const Letter l = image.letters()[0];
        const std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
        if (found[g]) continue;
        images[g] = l > 0 ? v : v.inverse();
        found[g] = true;
        if (--remaining == 0) break;
    }
    if (remaining > 0) return std::nullopt;
    // phi o inv = id makes phi surjective, hence bijective (free groups are Hopfian).
    Endomorphism inv(n, images);
    if (!is_inverse(phi, inv)) return std::nullopt;
    return inv;
}

void require_nontrivial_automorphism(const Endomorphism& phi) {
    if (phi.is_identity()) fail(ErrorKind::IdentityAutomorphism, "the identity acts trivially");
    automorphism_inverse(phi);
}

}  // namespace

Sign pulled_sign(const Endomorphism& phi, const LeftOrdering& s, const Word& w) {
    const Word image = phi.apply(w);
    if (image.empty()) fail(ErrorKind::EmptyWord, "phi sends " + w.str() + " to the identity");
    return s.sign(image);
}

OrderingWitness::OrderingWitness(const Endomorphism& phi, LeftOrdering ordering, Word word)
    : ordering_(std::move(ordering)), word_(std::move(word)) {
    before_ = ordering_.sign(word_);
    after_ = pulled_sign(phi, ordering_, word_);
    ensure(before_ != after_, "witness does not change sign");
}

Endomorphism automorphism_inverse(const Endomorphism& phi, int max_length) {
    const int n = phi.rank();
    const IntMatrix ab = induced_matrix(phi, 1, 1);
    const Rational det = determinant(RationalMatrix::from_ints(ab));
    if (det != 1 && det != -1) {
        fail(ErrorKind::NonAutomorphism, "abelianized map has determinant " + to_string(det));
    }
    if (auto inv = nielsen_inverse(phi)) return *inv;
    if (auto inv = brute_force_inverse(phi, max_length)) return *inv;
    fail(ErrorKind::NonAutomorphism, "no inverse with images of length <= " + std::to_string(max_length) +
                                         " in rank " + std::to_string(n));
}

OrderingWitness tm1_witness(const Endomorphism& phi, int c_max) {
    require_nontrivial_automorphism(phi);
    const int n = phi.rank();

    const IntegerAutomorphism a(induced_matrix(phi, 1, 1));
    if (!a.is_identity()) {
        const GlWitness w = gl_witness(a);
        std::vector<FlagOrdering> levels = StandardOrdering::identity(n, c_max).levels();
        levels[0] = w.before == Sign::Positive ? w.flag : w.flag.opposite();
        Word g(n);
        for (int i = 0; i < n; ++i) g = g * Word::generator(n, i + 1, static_cast<int>(w.vector[static_cast<std::size_t>(i)]));
        return OrderingWitness(phi, StandardOrdering(n, c_max, std::move(levels)), g);
    }

    // IA automorphism: phi(g) = g z with z deeper; separate g from phi(g).
    std::optional<Error> last;
    for (const Word& g : ball(n, 3)) {
        const Word image = phi.apply(g);
        if (image == g) continue;
        try {
            return OrderingWitness(phi, separate(g, image, c_max), g);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CommonRoot && e.kind() != ErrorKind::DepthCapExceeded) throw;
            last = e;
        }
    }
    fail(ErrorKind::DepthCapExceeded, last ? last->what() : "no moved word within radius 3");
}

Word boundary_separation(const Endomorphism& phi, int radius) {
    require_nontrivial_automorphism(phi);
    for (const Word& g : ball(phi.rank(), radius)) {
        if (!common_power(g, phi.apply(g))) return g;
    }
    fail(ErrorKind::NotFoundWithinBall, "every word of length <= " + std::to_string(radius) +
                                            " shares a power with its image");
}

}  // namespace ordcone
