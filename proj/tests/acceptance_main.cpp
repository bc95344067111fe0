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

// Runs every acceptance criterion and prints one line per criterion.
// Usage: ordcone_acceptance [--seed N] [--json]

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ordcone/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"ordcone acceptance suite"};
    std::uint64_t seed = ordcone::kDefaultSeed;
    bool json = false;
    app.add_option("--seed", seed, "seed for the randomized criteria");
    app.add_flag("--json", json, "emit a JSON array instead of text lines");
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    ordcone::Json out = ordcone::Json::array();
    for (const auto& r : ordcone::run_acceptance(seed)) {
        all = all && r.passed;
        if (json) {
            out.push_back(ordcone::to_json(r));
        } else {
            std::cout << ordcone::format_line(r) << std::endl;
        }
    }
    if (json) std::cout << out.dump(2) << "\n";
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
