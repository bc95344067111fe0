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

#include "oracles.hpp"

#include <map>

namespace ordcone::oracle {
namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

using Poly = std::map<std::vector<int>, std::int64_t>;

Poly multiply(const Poly& p, const Poly& q, int cap) {
    Poly out;
    for (const auto& [m1, c1] : p) {
        for (const auto& [m2, c2] : q) {
            if (static_cast<int>(m1.size() + m2.size()) > cap) continue;
            std::vector<int> m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            out[m] += c1 * c2;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

std::int64_t witt(int n, int k) {
    std::int64_t sum = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d == 0) sum += mobius(d) * ipow(n, k / d);
    }
    return sum / k;
}

std::optional<std::vector<int>> small_zero_combination(const std::vector<IntVector>& vs, int max_sum) {
    const std::size_t m = vs.size();
    std::vector<int> c(m, 0);
    // Odometer over all coefficient vectors with entries in 0..max_sum.
    while (true) {
        std::size_t i = 0;
        while (i < m && c[i] == max_sum) c[i++] = 0;
        if (i == m) return std::nullopt;
        ++c[i];
        int total = 0;
        for (int x : c) total += x;
        if (total > max_sum) continue;
        bool zero = true;
        for (std::size_t k = 0; k < vs.front().size() && zero; ++k) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < m; ++j) s += c[j] * vs[j][k];
            zero = s == 0;
        }
        if (zero) return c;
    }
}

std::optional<std::pair<int, int>> small_common_power(const Word& g, const Word& k, int bound) {
    for (int a = 1; a <= bound; ++a) {
        for (int b = 1; b <= bound; ++b) {
            if (g.pow(a) == k.pow(b)) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

std::vector<std::pair<std::vector<int>, std::int64_t>> naive_magnus(const Word& w, int cap) {
    Poly acc{{{}, 1}};
    for (const Letter l : w.letters()) {
        const int g = l > 0 ? l : -l;
        Poly factor{{{}, 1}};
        if (l > 0) {
            factor[{g}] = 1;
        } else {
            for (int k = 1; k <= cap; ++k) factor[std::vector<int>(static_cast<std::size_t>(k), g)] = (k % 2 ? -1 : 1);
        }
        acc = multiply(acc, factor, cap);
    }
    return {acc.begin(), acc.end()};
}

}  // namespace ordcone::oracle
