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

#include "ordcone/roots.hpp"

#include <numeric>

namespace ordcone {

RootDecomposition primitive_root(const Word& w) {
    if (w.empty()) fail(ErrorKind::EmptyWord, "the identity has no primitive root");
    const auto& l = w.letters();
    std::size_t lo = 0, hi = l.size();
    while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
        ++lo;
        --hi;
    }
    const std::vector<Letter> core(l.begin() + static_cast<std::ptrdiff_t>(lo), l.begin() + static_cast<std::ptrdiff_t>(hi));

    // KMP failure function gives the shortest period of the cyclic core.
    const std::size_t len = core.size();
    std::vector<std::size_t> border(len + 1, 0);
    for (std::size_t i = 1, k = 0; i < len; ++i) {
        while (k > 0 && core[i] != core[k]) k = border[k];
        if (core[i] == core[k]) ++k;
        border[i + 1] = k;
    }
    std::size_t period = len - border[len];
    if (len % period != 0) period = len;

    std::vector<Letter> root_letters(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(lo));
    root_letters.insert(root_letters.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(period));
    root_letters.insert(root_letters.end(), l.begin() + static_cast<std::ptrdiff_t>(hi), l.end());
    RootDecomposition out{Word(w.rank(), root_letters), static_cast<std::int64_t>(len / period)};
    ensure(out.root.pow(out.exponent) == w, "primitive root does not reproduce the word");
    return out;
}

std::optional<CommonPower> common_power(const Word& g, const Word& k) {
    const auto rg = primitive_root(g);
    const auto rk = primitive_root(k);
    if (!(rg.root == rk.root)) return std::nullopt;
    const std::int64_t d = std::gcd(rg.exponent, rk.exponent);
    return CommonPower{rk.exponent / d, rg.exponent / d};
}

}  // namespace ordcone
