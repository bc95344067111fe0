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
// JSON and text formats for matrices, orderings and witnesses.

#ifndef ORDCONE_SERIALIZE_HPP
#define ORDCONE_SERIALIZE_HPP

#include <string_view>

#include <json.hpp>

#include "ordcone/autact.hpp"
#include "ordcone/klein.hpp"
#include "ordcone/stdord.hpp"
#include "ordcone/znord.hpp"

namespace ordcone {

using Json = nlohmann::ordered_json;

/// Rows separated by ';', entries by whitespace: "1 1; 0 1".
IntMatrix parse_int_matrix(std::string_view text);
/// As parse_int_matrix, entries may be "p/q".
RationalMatrix parse_rational_matrix(std::string_view text);
/// Whitespace or comma separated integers, optionally wrapped in parentheses.
IntVector parse_int_vector(std::string_view text);

/// {"n": n, "rows": [["p/q", ...], ...]}
Json to_json(const FlagOrdering& f);
FlagOrdering flag_from_json(const Json& j);

/// {"rank": n, "class": c, "levels": [flag, ...]}
Json to_json(const StandardOrdering& s);
StandardOrdering standard_from_json(const Json& j);

/// {"kind": "kernel", "rank", "class", "psi", "quotient", "functional", "tail", "tie_sign"}
Json to_json(const KernelOrdering& k);
KernelOrdering kernel_from_json(const Json& j);

Json to_json(const LeftOrdering& s);
LeftOrdering left_from_json(const Json& j);

/// {"ordering": ..., "word": "...", "sign_before": "+", "sign_after": "-"}
Json to_json(const OrderingWitness& w);

Json to_json(const GlWitness& w);
Json to_json(const ConeReport& r);
Json to_json(const ConeCertificate& c);
Json to_json(const KleinOrdering& o);
Json to_json(const OutTable& t);

}  // namespace ordcone

#endif  // ORDCONE_SERIALIZE_HPP
