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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordcone/ordcone.h"

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
    int code;
    std::string message;
};

void check(oc_status s) {
    if (s != OC_OK) throw Failure{static_cast<int>(s), oc_last_error()};
}

[[noreturn]] void usage(const std::string& message) { throw Failure{OC_USAGE, message}; }

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using WordPtr = std::unique_ptr<oc_word, Deleter<oc_word, oc_word_free>>;
using FlagPtr = std::unique_ptr<oc_flag, Deleter<oc_flag, oc_flag_free>>;
using OrderingPtr = std::unique_ptr<oc_ordering, Deleter<oc_ordering, oc_ordering_free>>;
using EndoPtr = std::unique_ptr<oc_endo, Deleter<oc_endo, oc_endo_free>>;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
    std::string out = s ? s : "";
    oc_string_free(s);
    return out;
}

template <typename F>
std::string text_of(F&& call) {
    char* s = nullptr;
    check(call(&s));
    return take(s);
}

template <typename F>
Json json_of(F&& call) {
    return Json::parse(text_of(std::forward<F>(call)));
}

struct Options {
    bool json = false;
    int rank = 0;
    int cls = 5;
    std::uint64_t seed = 20260416;
};

WordPtr word(const std::string& text, int rank) {
    oc_word* w = nullptr;
    check(oc_word_parse(text.c_str(), rank, &w));
    return WordPtr(w);
}

// Parses all words in one common free group.
std::vector<WordPtr> words(const std::vector<std::string>& texts, int rank) {
    int r = rank;
    for (const auto& t : texts) r = std::max(r, oc_word_rank(word(t, rank).get()));
    std::vector<WordPtr> out;
    for (const auto& t : texts) out.push_back(word(t, r));
    return out;
}

std::string str(const oc_word* w) {
    return text_of([&](char** s) { return oc_word_str(w, s); });
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) usage("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

OrderingPtr ordering(const std::string& source, int rank, int cls) {
    oc_ordering* s = nullptr;
    if (source.empty() || source == "identity") {
        check(oc_ordering_identity(rank, cls, &s));
    } else if (source == "opposite") {
        oc_ordering* id = nullptr;
        check(oc_ordering_identity(rank, cls, &id));
        OrderingPtr owned(id);
        check(oc_ordering_opposite(owned.get(), &s));
    } else {
        check(oc_ordering_from_json(read_file(source).c_str(), &s));
    }
    return OrderingPtr(s);
}

EndoPtr endo(const std::string& text, int rank) {
    oc_endo* phi = nullptr;
    check(oc_endo_parse(text.c_str(), rank, &phi));
    return EndoPtr(phi);
}

std::vector<std::int64_t> vec(const std::string& text) {
    std::string s = text;
    for (char& c : s) {
        if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
    }
    std::stringstream in(s);
    std::vector<std::int64_t> out;
    for (std::string tok; in >> tok;) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) usage("bad vector entry '" + tok + "'");
        } catch (const std::logic_error&) {
            usage("bad vector entry '" + tok + "'");
        }
    }
    if (out.empty()) usage("empty vector '" + text + "'");
    return out;
}

std::string sign_text(int s) { return s > 0 ? "+" : s < 0 ? "-" : "0"; }

std::string vector_text(const Json& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
    return out + ")";
}

void print_flag(const Json& f, const std::string& indent = "  ") {
    for (const auto& row : f.at("rows")) {
        std::string line = indent + "[";
        for (std::size_t i = 0; i < row.size(); ++i) line += (i ? " " : "") + row[i].get<std::string>();
        std::cout << line << "]\n";
    }
}

void print_ordering(const Json& s) {
    if (s.value("kind", std::string("standard")) == "kernel") {
        std::cout << "kernel ordering on F_" << s.at("rank") << ", tail class " << s.at("class") << "\n";
        std::cout << "  psi: " << s.at("psi").dump() << "\n";
        std::cout << "  functional:";
        for (const auto& e : s.at("functional")) {
            std::cout << " " << e.at("value").get<std::string>() << "*d" << e.at("generator") << "@"
                      << vector_text(e.at("shift"));
        }
        std::cout << "\n  tie sign: " << s.at("tie_sign") << "\n";
        return;
    }
    std::cout << "standard ordering on F_" << s.at("rank") << ", class " << s.at("class") << "\n";
    int level = 1;
    for (const auto& f : s.at("levels")) {
        std::cout << "  level " << level++ << ":\n";
        print_flag(f, "    ");
    }
}

void emit(const Options& o, const Json& j, const std::function<void()>& human) {
    if (o.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        human();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orderings of free groups, Z^n and the Klein bottle group"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    Options o;
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--rank", o.rank, "free group rank (default: inferred from the words)");
    app.add_option("--class", o.cls, "class cap for standard orderings")->check(CLI::Range(1, 7));
    app.add_option("--seed", o.seed, "seed for randomized checks");

    std::vector<std::function<void()>> actions;
    auto on = [&](CLI::App* cmd, std::function<void()> f) { cmd->callback([&actions, f] { actions.push_back(f); }); };

    // zn --------------------------------------------------------------------
    auto* zn = app.add_subcommand("zn", "flag orderings of Z^n")->require_subcommand(1);
    std::string flag_text, matrix_text, vector_arg;
    std::vector<std::string> vector_args;
    {
        auto* c = zn->add_subcommand("sign", "sign of a vector under a flag");
        c->add_option("--flag", flag_text, "flag matrix, rows separated by ';'")->required();
        c->add_option("vector", vector_arg, "vector such as \"(1, -2)\"")->required();
        on(c, [&] {
            oc_flag* f = nullptr;
            check(oc_flag_parse(flag_text.c_str(), &f));
            FlagPtr owned(f);
            const auto v = vec(vector_arg);
            int s = 0;
            check(oc_flag_sign(f, v.data(), v.size(), &s));
            emit(o, Json{{"sign", sign_text(s)}}, [&] { std::cout << sign_text(s) << "\n"; });
        });
    }
    {
        auto* c = zn->add_subcommand("act", "pull a flag back along an integer matrix");
        c->add_option("--matrix", matrix_text, "GL_n(Z) matrix")->required();
        c->add_option("--flag", flag_text, "flag matrix")->required();
        on(c, [&] {
            oc_flag* f = nullptr;
            check(oc_flag_parse(flag_text.c_str(), &f));
            FlagPtr owned(f);
            oc_flag* g = nullptr;
            check(oc_flag_act(matrix_text.c_str(), f, &g));
            FlagPtr pulled(g);
            const Json j = json_of([&](char** s) { return oc_flag_to_json(g, s); });
            emit(o, j, [&] {
                std::cout << "pulled flag:\n";
                print_flag(j);
            });
        });
    }
    {
        auto* c = zn->add_subcommand("witness", "a flag and vector whose sign the matrix changes");
        c->add_option("--matrix", matrix_text, "GL_n(Z) matrix")->required();
        on(c, [&] {
            const Json j = json_of([&](char** s) { return oc_gl_witness_json(matrix_text.c_str(), s); });
            emit(o, j, [&] {
                std::cout << "flag:\n";
                print_flag(j.at("flag"));
                std::cout << "vector: " << vector_text(j.at("vector")) << "\n";
                std::cout << "sign of v: " << j.at("sign_before").get<std::string>()
                          << "  sign of A v: " << j.at("sign_after").get<std::string>() << "\n";
            });
        });
    }
    {
        auto* c = zn->add_subcommand("realize", "a flag making every given vector positive");
        c->add_option("vectors", vector_args, "vectors such as \"(1, 0)\"")->required();
        on(c, [&] {
            std::vector<std::int64_t> flat;
            std::size_t dim = 0;
            for (const auto& t : vector_args) {
                const auto v = vec(t);
                if (dim != 0 && v.size() != dim) usage("vectors differ in dimension");
                dim = v.size();
                flat.insert(flat.end(), v.begin(), v.end());
            }
            oc_flag* f = nullptr;
            check(oc_realize_flag(flat.data(), vector_args.size(), dim, &f));
            FlagPtr owned(f);
            const Json j = json_of([&](char** s) { return oc_flag_to_json(f, s); });
            emit(o, j, [&] {
                std::cout << "flag:\n";
                print_flag(j);
            });
        });
    }

    // free ------------------------------------------------------------------
    auto* fr = app.add_subcommand("free", "words and orderings of free groups")->require_subcommand(1);
    std::string w1, w2, ordering_path, ordering_b;
    int radius = 3;
    {
        auto* c = fr->add_subcommand("depth", "lower central depth of a word");
        c->add_option("word", w1)->required();
        on(c, [&] {
            auto w = word(w1, o.rank);
            int d = 0;
            check(oc_word_depth(w.get(), o.cls, &d));
            const Json j{{"word", str(w.get())}, {"depth", d == 0 ? Json(nullptr) : Json(d)}};
            emit(o, j, [&] {
                if (d == 0) {
                    std::cout << "deeper than class " << o.cls << "\n";
                } else {
                    std::cout << d << "\n";
                }
            });
        });
    }
    {
        auto* c = fr->add_subcommand("coords", "Hall-basis coordinates at the leading level");
        c->add_option("word", w1)->required();
        on(c, [&] {
            auto w = word(w1, o.rank);
            const Json j = json_of([&](char** s) { return oc_word_coords_json(w.get(), o.cls, s); });
            emit(o, j, [&] {
                std::cout << "depth " << j.at("depth") << "\n";
                for (std::size_t i = 0; i < j.at("coords").size(); ++i) {
                    std::cout << "  " << j.at("basis")[i].get<std::string>() << ": " << j.at("coords")[i] << "\n";
                }
            });
        });
    }
    {
        auto* c = fr->add_subcommand("magnus", "truncated Magnus expansion");
        c->add_option("word", w1)->required();
        on(c, [&] {
            auto w = word(w1, o.rank);
            const std::string m = text_of([&](char** s) { return oc_word_magnus(w.get(), o.cls, s); });
            emit(o, Json{{"word", str(w.get())}, {"magnus", m}}, [&] { std::cout << m << "\n"; });
        });
    }
    {
        auto* c = fr->add_subcommand("sign", "sign of a word");
        c->add_option("word", w1)->required();
        c->add_option("--ordering", ordering_path, "ordering JSON file, 'identity' or 'opposite'");
        on(c, [&] {
            auto w = word(w1, o.rank);
            auto s = ordering(ordering_path, oc_word_rank(w.get()), o.cls);
            int sign = 0;
            check(oc_ordering_sign(s.get(), w.get(), &sign));
            emit(o, Json{{"word", str(w.get())}, {"sign", sign_text(sign)}},
                 [&] { std::cout << sign_text(sign) << "\n"; });
        });
    }
    {
        auto* c = fr->add_subcommand("compare", "compare two words");
        c->add_option("g", w1)->required();
        c->add_option("other", w2, "word compared against g")->required();
        c->add_option("--ordering", ordering_path, "ordering JSON file, 'identity' or 'opposite'");
        on(c, [&] {
            auto ws = words({w1, w2}, o.rank);
            auto s = ordering(ordering_path, oc_word_rank(ws[0].get()), o.cls);
            int cmp = 0;
            check(oc_ordering_compare(s.get(), ws[0].get(), ws[1].get(), &cmp));
            const std::string rel = cmp < 0 ? "<" : cmp > 0 ? ">" : "=";
            emit(o, Json{{"g", str(ws[0].get())}, {"h", str(ws[1].get())}, {"relation", rel}},
                 [&] { std::cout << str(ws[0].get()) << " " << rel << " " << str(ws[1].get()) << "\n"; });
        });
    }
    {
        auto* c = fr->add_subcommand("separate", "an ordering with g positive and k negative");
        c->add_option("g", w1)->required();
        c->add_option("k", w2)->required();
        on(c, [&] {
            auto ws = words({w1, w2}, o.rank);
            oc_ordering* s = nullptr;
            check(oc_separate(ws[0].get(), ws[1].get(), o.cls, &s));
            OrderingPtr owned(s);
            const Json j = json_of([&](char** t) { return oc_ordering_to_json(s, t); });
            emit(o, j, [&] {
                std::cout << str(ws[0].get()) << " > 1 > " << str(ws[1].get()) << " in the ";
                print_ordering(j);
            });
        });
    }
    {
        auto* c = fr->add_subcommand("axioms", "check the positive-cone axioms on a ball");
        c->add_option("--ordering", ordering_path, "ordering JSON file, 'identity' or 'opposite'");
        c->add_option("--radius", radius, "ball radius")->check(CLI::Range(0, 5));
        on(c, [&] {
            auto s = ordering(ordering_path, o.rank == 0 ? 2 : o.rank, o.cls);
            int passed = 0;
            const Json j = json_of([&](char** t) { return oc_verify_cone_axioms(s.get(), radius, &passed, t); });
            emit(o, j, [&] {
                for (const char* k : {"totality", "antisymmetry", "closure", "conjugation"}) {
                    std::cout << k << ": " << (j.at(k).get<bool>() ? "ok" : "FAILED") << "\n";
                }
                std::cout << "words " << j.at("words") << ", positive pairs " << j.at("pairs") << ", skipped "
                          << j.at("skipped") << "\n";
                if (j.contains("counterexample")) std::cout << "counterexample: " << j.at("counterexample").dump() << "\n";
                std::cout << (passed ? "passed" : "failed") << "\n";
            });
            if (!passed) throw Failure{OC_NEGATIVE, "cone axioms fail"};
        });
    }
    {
        auto* c = fr->add_subcommand("distance", "agreement radius of two orderings");
        c->add_option("a", ordering_path, "ordering JSON file, 'identity' or 'opposite'")->required();
        c->add_option("b", ordering_b, "ordering JSON file, 'identity' or 'opposite'")->required();
        c->add_option("--radius", radius, "largest radius to check")->check(CLI::Range(0, 6));
        on(c, [&] {
            const int rank = o.rank == 0 ? 2 : o.rank;
            auto a = ordering(ordering_path, rank, o.cls);
            auto b = ordering(ordering_b, rank, o.cls);
            int r = 0;
            check(oc_ball_distance(a.get(), b.get(), radius, &r));
            emit(o, Json{{"radius", r}}, [&] { std::cout << r << "\n"; });
        });
    }

    // aut -------------------------------------------------------------------
    auto* au = app.add_subcommand("aut", "automorphisms, roots and boundary certificates")->require_subcommand(1);
    std::string map_text;
    int boundary_radius = 4;
    {
        auto* c = au->add_subcommand("witness", "ordering and word whose sign the automorphism changes");
        c->add_option("map", map_text, "e.g. \"x1 -> x1 x2 ; x2 -> x2\"")->required();
        on(c, [&] {
            auto phi = endo(map_text, o.rank);
            const Json j = json_of([&](char** s) { return oc_tm1_witness_json(phi.get(), o.cls, s); });
            emit(o, j, [&] {
                std::cout << "word: " << j.at("word").get<std::string>() << "\n";
                std::cout << "sign before: " << j.at("sign_before").get<std::string>()
                          << "  sign after: " << j.at("sign_after").get<std::string>() << "\n";
                print_ordering(j.at("ordering"));
            });
        });
    }
    {
        auto* c = au->add_subcommand("pull", "sign of a word in the pulled-back ordering");
        c->add_option("map", map_text)->required();
        c->add_option("word", w1)->required();
        c->add_option("--ordering", ordering_path, "ordering JSON file, 'identity' or 'opposite'");
        on(c, [&] {
            auto w = word(w1, o.rank);
            auto phi = endo(map_text, oc_word_rank(w.get()));
            auto s = ordering(ordering_path, oc_word_rank(w.get()), o.cls);
            int sign = 0;
            check(oc_pulled_sign(phi.get(), s.get(), w.get(), &sign));
            emit(o, Json{{"word", str(w.get())}, {"sign", sign_text(sign)}},
                 [&] { std::cout << sign_text(sign) << "\n"; });
        });
    }
    {
        auto* c = au->add_subcommand("root", "primitive root of a word");
        c->add_option("word", w1)->required();
        on(c, [&] {
            auto w = word(w1, o.rank);
            oc_word* r = nullptr;
            std::int64_t e = 0;
            check(oc_primitive_root(w.get(), &r, &e));
            WordPtr root(r);
            emit(o, Json{{"root", str(r)}, {"exponent", e}}, [&] { std::cout << "(" << str(r) << ")^" << e << "\n"; });
        });
    }
    {
        auto* c = au->add_subcommand("common-power", "smallest a, b > 0 with g^a = k^b");
        c->add_option("g", w1)->required();
        c->add_option("k", w2)->required();
        on(c, [&] {
            auto ws = words({w1, w2}, o.rank);
            int found = 0;
            std::int64_t a = 0, b = 0;
            check(oc_common_power(ws[0].get(), ws[1].get(), &found, &a, &b));
            const Json j = found ? Json{{"a", a}, {"b", b}} : Json{{"a", nullptr}, {"b", nullptr}};
            emit(o, j, [&] {
                if (found) {
                    std::cout << "g^" << a << " = k^" << b << "\n";
                } else {
                    std::cout << "none\n";
                }
            });
        });
    }
    {
        auto* c = au->add_subcommand("boundary", "word g sharing no power with its image");
        c->add_option("map", map_text)->required();
        c->add_option("--radius", boundary_radius, "search radius")->check(CLI::Range(1, 8));
        on(c, [&] {
            auto phi = endo(map_text, o.rank);
            oc_word* g = nullptr;
            check(oc_boundary_separation(phi.get(), boundary_radius, &g));
            WordPtr owned(g);
            oc_word* img = nullptr;
            check(oc_endo_apply(phi.get(), g, &img));
            WordPtr image(img);
            emit(o, Json{{"word", str(g)}, {"image", str(img)}},
                 [&] { std::cout << "g = " << str(g) << ", phi(g) = " << str(img) << ", no common power\n"; });
        });
    }

    // klein -----------------------------------------------------------------
    auto* kl = app.add_subcommand("klein", "the Klein bottle group <x, y | x^-1 y x = y^-1>")->require_subcommand(1);
    std::string p_text, q_text;
    int eps = 0, delta = 0;
    bool local_search = false;
    {
        auto* c = kl->add_subcommand("mul", "normal form of a product");
        c->add_option("p", p_text)->required();
        c->add_option("q", q_text)->required();
        on(c, [&] {
            const std::string r = text_of([&](char** s) { return oc_klein_mul(p_text.c_str(), q_text.c_str(), s); });
            emit(o, Json{{"product", r}}, [&] { std::cout << r << "\n"; });
        });
    }
    {
        auto* c = kl->add_subcommand("orderings", "the four left orderings");
        on(c, [&] {
            const Json j = json_of([](char** s) { return oc_klein_orderings_json(s); });
            emit(o, j, [&] {
                for (const auto& e : j) {
                    const int ep = e.at("eps").get<int>(), de = e.at("delta").get<int>();
                    std::cout << "(" << sign_text(ep) << "," << sign_text(de) << "): x^a y^b > 1 iff "
                              << (ep > 0 ? "a > 0" : "a < 0") << ", or a = 0 and " << (de > 0 ? "b > 0" : "b < 0")
                              << "\n";
                }
            });
        });
    }
    {
        auto* c = kl->add_subcommand("pull", "pull orderings back along an automorphism");
        c->add_option("map", map_text, "e.g. \"x -> x y ; y -> y\"")->required();
        c->add_option("--eps", eps)->check(CLI::IsMember({-1, 1}));
        c->add_option("--delta", delta)->check(CLI::IsMember({-1, 1}));
        on(c, [&] {
            std::vector<std::pair<int, int>> sources;
            if (eps != 0 && delta != 0) {
                sources.push_back({eps, delta});
            } else if (eps != 0 || delta != 0) {
                usage("give both --eps and --delta, or neither");
            } else {
                sources = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
            }
            Json out = Json::array();
            for (const auto& [e, d] : sources) {
                const Json r = json_of([&](char** s) { return oc_klein_pull_json(map_text.c_str(), e, d, s); });
                out.push_back({{"from", {{"eps", e}, {"delta", d}}}, {"to", r}});
            }
            emit(o, out, [&] {
                for (const auto& row : out) {
                    std::cout << "(" << sign_text(row["from"]["eps"]) << "," << sign_text(row["from"]["delta"])
                              << ") -> (" << sign_text(row["to"]["eps"]) << "," << sign_text(row["to"]["delta"])
                              << ")\n";
                }
            });
        });
    }
    {
        auto* c = kl->add_subcommand("table", "Out(K) and its action on the four orderings");
        c->add_flag("--local-search", local_search, "also count locally consistent cones on a box");
        on(c, [&] {
            Json j = json_of([](char** s) { return oc_klein_table_json(s); });
            if (local_search) j["local_search"] = json_of([](char** s) { return oc_klein_local_search_json(3, 5, s); });
            emit(o, j, [&] {
                const auto& classes = j.at("classes");
                std::cout << "Out(K) multiplication (by class index):\n";
                for (std::size_t i = 0; i < classes.size(); ++i) {
                    std::cout << "  " << i << " " << classes[i].at("name").get<std::string>() << " ["
                              << classes[i].at("representative").get<std::string>() << "]:";
                    for (const auto& p : classes[i].at("products")) std::cout << " " << p;
                    std::cout << "\n";
                }
                std::cout << "group: " << (j.at("klein_four").get<bool>() ? "Z/2 x Z/2" : "not Z/2 x Z/2") << "\n";
                std::cout << "action on orderings (+,+) (+,-) (-,+) (-,-):\n";
                for (const auto& c2 : classes) {
                    std::cout << "  " << c2.at("name").get<std::string>() << ": " << c2.at("action").dump() << "\n";
                }
                std::cout << "kernel: " << j.at("kernel").dump() << "\n";
                std::cout << "conjugation by y fixes every ordering: "
                          << (j.at("conj_y_fixes_all").get<bool>() ? "yes" : "no") << "\n";
                std::cout << "conjugation orbits of orderings: " << j.at("conjugation_orbits").dump() << "\n";
                if (j.contains("local_search")) {
                    const auto& ls = j.at("local_search");
                    std::cout << "box search: " << ls.at("locally_consistent") << " locally consistent on |a|,|b| <= "
                              << ls.at("radius") << ", " << ls.at("extendable") << " extend to "
                              << ls.at("extend_radius") << "\n";
                }
            });
        });
    }

    // report ----------------------------------------------------------------
    int criterion = 0;
    {
        auto* c = app.add_subcommand("report", "run the acceptance suite");
        c->add_option("--criterion", criterion, "run a single criterion")->check(CLI::Range(1, 10));
        on(c, [&] {
            Json criteria = Json::array();
            bool all = true;
            const int first = criterion == 0 ? 1 : criterion;
            const int last = criterion == 0 ? oc_acceptance_count() : criterion;
            for (int id = first; id <= last; ++id) {
                int passed = 0;
                Json r = json_of([&](char** s) { return oc_acceptance_criterion(id, o.seed, &passed, s); });
                all = all && passed;
                if (!o.json) std::cout << r.at("line").get<std::string>() << std::endl;
                criteria.push_back(std::move(r));
            }
            if (o.json) std::cout << Json{{"seed", o.seed}, {"passed", all}, {"criteria", criteria}}.dump(2) << "\n";
            if (!all) throw Failure{OC_NEGATIVE, "acceptance criteria failed"};
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return OC_USAGE;
    }
    try {
        for (const auto& a : actions) a();
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return OC_INTERNAL;
    }
    return 0;
}
