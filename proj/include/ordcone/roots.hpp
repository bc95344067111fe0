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

#ifndef ORDCONE_ROOTS_HPP
#define ORDCONE_ROOTS_HPP

#include <cstdint>
#include <optional>

#include "ordcone/freenil.hpp"

namespace ordcone {

/// w = root^exponent with exponent maximal; root is not a proper power.
struct RootDecomposition {
    Word root;
    std::int64_t exponent;
};

/// Cyclically reduces w = c u c^-1, finds the period of u and conjugates the
/// period back. Throws EmptyWord.
RootDecomposition primitive_root(const Word& w);

struct CommonPower {
    std::int64_t a;  // g^a = k^b
    std::int64_t b;
};

/// Minimal positive (a, b) with g^a = k^b, or nullopt. In a free group this
/// happens exactly when g and k have the same primitive root.
std::optional<CommonPower> common_power(const Word& g, const Word& k);

}  // namespace ordcone

#endif  // ORDCONE_ROOTS_HPP
