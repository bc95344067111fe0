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
// Independent reference computations used to check the main algorithms.
// Each one is deliberately naive and shares no code path with what it checks.

#ifndef ORDCONE_SRC_ORACLES_HPP
#define ORDCONE_SRC_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ordcone/exactlin.hpp"
#include "ordcone/freenil.hpp"

namespace ordcone::oracle {

/// Necklace count (1/k) sum_{d | k} mu(d) n^(k/d): rank of gamma_k / gamma_{k+1} of F_n.
std::int64_t witt(int n, int k);

/// Nonnegative integer coefficients, not all zero, with sum <= max_sum and
/// sum c_i v_i = 0, by exhaustive enumeration.
std::optional<std::vector<int>> small_zero_combination(const std::vector<IntVector>& vs, int max_sum);

/// Some 1 <= a, b <= bound with g^a = k^b, by multiplying words out.
std::optional<std::pair<int, int>> small_common_power(const Word& g, const Word& k, int bound);

/// Dense Magnus expansion keyed by monomial, computed from the definition
/// x -> 1 + X, x^-1 -> 1 - X + X^2 - ... with map-based polynomials.
std::vector<std::pair<std::vector<int>, std::int64_t>> naive_magnus(const Word& w, int cap);

}  // namespace ordcone::oracle

#endif  // ORDCONE_SRC_ORACLES_HPP
