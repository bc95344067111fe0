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
// Acceptance suite: ten end-to-end checks with pinned sizes, seeds and time
// limits, each comparing the library against an independent reference.

#ifndef ORDCONE_ACCEPTANCE_HPP
#define ORDCONE_ACCEPTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordcone/freenil.hpp"
#include "ordcone/serialize.hpp"

namespace ordcone {

inline constexpr std::uint64_t kDefaultSeed = 20260416;

struct CatalogEntry {
    std::string name;
    Endomorphism phi;
};

/// Nielsen transvections, inversions, permutations, inner automorphisms and
/// elementary IA maps of F_2 and F_3; the identity is not included.
std::vector<CatalogEntry> automorphism_catalog();

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    std::optional<double> limit_seconds;
};

CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

Json to_json(const CriterionResult& r);
/// "[PASS] 1 GL faithfulness: ... (0.12s / 5s)"
std::string format_line(const CriterionResult& r);

}  // namespace ordcone

#endif  // ORDCONE_ACCEPTANCE_HPP
