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

#include "ordcone/serialize.hpp"

#include <sstream>

namespace ordcone {
namespace {

std::vector<std::vector<std::string>> split_matrix(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line, ';')) {
        std::stringstream row_in(line);
        std::vector<std::string> row;
        for (std::string tok; row_in >> tok;) row.push_back(tok);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(ErrorKind::Parse, "empty matrix");
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) fail(ErrorKind::Parse, "ragged matrix rows");
    }
    return rows;
}

std::int64_t parse_int(const std::string& tok) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        fail(ErrorKind::Parse, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(ErrorKind::Parse, "expected an integer, got '" + tok + "'");
    return v;
}

template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        fail(ErrorKind::Parse, e.what());
    }
}

}  // namespace

IntMatrix parse_int_matrix(std::string_view text) {
    IntMatrix out;
    for (const auto& row : split_matrix(text)) {
        IntVector r;
        for (const auto& tok : row) r.push_back(parse_int(tok));
        out.push_back(std::move(r));
    }
    return out;
}

RationalMatrix parse_rational_matrix(std::string_view text) {
    std::vector<RationalVector> out;
    for (const auto& row : split_matrix(text)) {
        RationalVector r;
        for (const auto& tok : row) r.push_back(parse_rational(tok));
        out.push_back(std::move(r));
    }
    return RationalMatrix(std::move(out));
}

IntVector parse_int_vector(std::string_view text) {
    std::string s(text);
    for (char& c : s) {
        if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
    }
    std::stringstream in(s);
    IntVector out;
    for (std::string tok; in >> tok;) out.push_back(parse_int(tok));
    if (out.empty()) fail(ErrorKind::Parse, "empty vector");
    return out;
}

Json to_json(const FlagOrdering& f) {
    Json rows = Json::array();
    for (const auto& row : f.matrix().data()) {
        Json r = Json::array();
        for (const auto& q : row) r.push_back(to_string(q));
        rows.push_back(std::move(r));
    }
    return Json{{"n", f.dim()}, {"rows", std::move(rows)}};
}

FlagOrdering flag_from_json(const Json& j) {
    return guarded([&] {
        const std::size_t n = j.at("n").get<std::size_t>();
        std::vector<RationalVector> rows;
        for (const auto& r : j.at("rows")) {
            RationalVector row;
            for (const auto& q : r) row.push_back(parse_rational(q.is_string() ? q.get<std::string>() : q.dump()));
            if (row.size() != n) fail(ErrorKind::DimensionMismatch, "flag row length differs from n");
            rows.push_back(std::move(row));
        }
        if (rows.size() != n) fail(ErrorKind::DimensionMismatch, "flag needs n rows");
        return FlagOrdering(RationalMatrix(std::move(rows)));
    });
}

Json to_json(const StandardOrdering& s) {
    Json levels = Json::array();
    for (const auto& f : s.levels()) levels.push_back(to_json(f));
    return Json{{"rank", s.rank()}, {"class", s.cls()}, {"levels", std::move(levels)}};
}

StandardOrdering standard_from_json(const Json& j) {
    return guarded([&] {
        std::vector<FlagOrdering> levels;
        for (const auto& f : j.at("levels")) levels.push_back(flag_from_json(f));
        return StandardOrdering(j.at("rank").get<int>(), j.at("class").get<int>(), std::move(levels));
    });
}

Json to_json(const KernelOrdering& k) {
    Json functional = Json::array();
    for (const auto& [key, value] : k.functional()) {
        functional.push_back({{"generator", key.generator}, {"shift", key.shift}, {"value", to_string(value)}});
    }
    return Json{{"kind", "kernel"},
                {"rank", k.rank()},
                {"class", k.cls()},
                {"psi", k.psi()},
                {"quotient", to_json(k.quotient())},
                {"functional", std::move(functional)},
                {"tail", to_json(k.tail())},
                {"tie_sign", k.tie_sign()}};
}

KernelOrdering kernel_from_json(const Json& j) {
    return guarded([&] {
        std::map<FoxKey, Rational> functional;
        for (const auto& e : j.at("functional")) {
            functional[FoxKey{e.at("generator").get<int>(), e.at("shift").get<IntVector>()}] =
                parse_rational(e.at("value").get<std::string>());
        }
        KernelOrdering out(j.at("psi").get<IntMatrix>(), flag_from_json(j.at("quotient")), std::move(functional),
                           standard_from_json(j.at("tail")), j.value("tie_sign", 1));
        if (out.rank() != j.at("rank").get<int>()) fail(ErrorKind::DimensionMismatch, "rank differs from the tail");
        return out;
    });
}

Json to_json(const LeftOrdering& s) { return s.is_standard() ? to_json(s.standard()) : to_json(s.kernel()); }

LeftOrdering left_from_json(const Json& j) {
    if (j.is_object() && j.value("kind", std::string("standard")) == "kernel") return kernel_from_json(j);
    return standard_from_json(j);
}

Json to_json(const OrderingWitness& w) {
    return Json{{"ordering", to_json(w.ordering())},
                {"word", w.word().str()},
                {"sign_before", std::string(1, sign_char(w.sign_before()))},
                {"sign_after", std::string(1, sign_char(w.sign_after()))}};
}

Json to_json(const GlWitness& w) {
    return Json{{"flag", to_json(w.flag)},
                {"vector", w.vector},
                {"sign_before", std::string(1, sign_char(w.before))},
                {"sign_after", std::string(1, sign_char(w.after))}};
}

Json to_json(const ConeReport& r) {
    Json j{{"radius", r.radius},
           {"words", r.words},
           {"pairs", r.pairs},
           {"skipped", r.skipped},
           {"totality", r.totality},
           {"antisymmetry", r.antisymmetry},
           {"closure", r.closure},
           {"conjugation", r.conjugation},
           {"conjugation_required", r.conjugation_required},
           {"passed", r.passed}};
    if (r.counterexample) {
        j["failed_axiom"] = r.failed_axiom;
        j["counterexample"] = {r.counterexample->first.str(), r.counterexample->second.str()};
    }
    return j;
}

Json to_json(const ConeCertificate& c) {
    if (const auto* h = std::get_if<Halfspace>(&c)) {
        Json f = Json::array();
        for (const auto& q : h->functional) f.push_back(to_string(q));
        return Json{{"kind", "halfspace"}, {"functional", std::move(f)}};
    }
    Json coeffs = Json::array();
    for (const auto& z : std::get<ZeroCombo>(c).coefficients) coeffs.push_back(z.get_str());
    return Json{{"kind", "zero_combination"}, {"coefficients", std::move(coeffs)}};
}

Json to_json(const KleinOrdering& o) { return Json{{"eps", o.eps()}, {"delta", o.delta()}}; }

Json to_json(const OutTable& t) {
    Json classes = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        classes.push_back({{"name", t.names[i]},
                           {"representative", t.representatives[i].str()},
                           {"products", t.product[i]},
                           {"action", t.action[i]}});
    }
    Json kernel = Json::array();
    for (int k : t.kernel) kernel.push_back(t.names[static_cast<std::size_t>(k)]);
    return Json{{"classes", std::move(classes)},
                {"kernel", std::move(kernel)},
                {"klein_four", t.klein_four},
                {"pairwise_non_inner", t.pairwise_non_inner},
                {"alpha1_alpha2_inner", t.alpha1_alpha2_inner},
                {"conj_y_fixes_all", t.conj_y_fixes_all},
                {"conj_y_nontrivial", t.conj_y_nontrivial},
                {"conjugation_orbits", t.conjugation_orbits}};
}

}  // namespace ordcone
