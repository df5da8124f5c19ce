/*
 * Copyright 2026 the frobstruct authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "frobstruct/algebra.hpp"
#include "frobstruct/coalgebra.hpp"
#include "frobstruct/errors.hpp"
#include "frobstruct/preorder.hpp"
#include "frobstruct/rational.hpp"

namespace frobstruct {

/// Input object: {"n": int, "pairs": [[x,y],...], "mode": "verify"|"closure"}.
/// Diagonal pairs are optional; mode defaults to verify.
inline Preorder preorder_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("preorder document must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("preorder document needs an integer field \"n\"");
    if (!j.contains("pairs") || !j["pairs"].is_array())
        throw ParseError("preorder document needs an array field \"pairs\"");
    BuildMode mode = BuildMode::Verify;
    if (j.contains("mode")) {
        if (!j["mode"].is_string()) throw ParseError("\"mode\" must be a string");
        const std::string m = j["mode"].get<std::string>();
        if (m == "verify")
            mode = BuildMode::Verify;
        else if (m == "closure")
            mode = BuildMode::Closure;
        else
            throw ParseError("\"mode\" must be \"verify\" or \"closure\"");
    }
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j["pairs"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("each pair must be a two-element integer array");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return build_preorder(j["n"].get<int>(), pairs, mode);
}

inline Preorder preorder_from_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return preorder_from_json(j);
}

/// Emitted form: closed relation with the diagonal included, verify mode.
inline nlohmann::json preorder_to_json(const Preorder& p) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [x, y] : p.comparable_pairs()) pairs.push_back({x, y});
    return nlohmann::json{{"n", p.n()}, {"pairs", pairs}, {"mode", "verify"}};
}

/// Sparse element list: [{"x":0,"y":2,"coef":"3/2"},...].
inline Elem elem_from_json(const IncCoalgebra& C, const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("element document must be a JSON array");
    Elem e;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("x") || !t.contains("y") || !t.contains("coef") ||
            !t["x"].is_number_integer() || !t["y"].is_number_integer() ||
            !t["coef"].is_string())
            throw ParseError("each element term needs integer \"x\", \"y\" and string \"coef\"");
        const int x = t["x"].get<int>();
        const int y = t["y"].get<int>();
        if (x < 0 || x >= C.preorder().n() || y < 0 || y >= C.preorder().n())
            throw IndexOutOfRangeError("element term index out of range");
        e.add(C.index(x, y), parse_rational(t["coef"].get<std::string>()));
    }
    return e;
}

inline nlohmann::json elem_to_json(const IncCoalgebra& C, const Elem& e) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [i, coef] : e.c) {
        const auto& [x, y] = C.basis_pair(i);
        out.push_back({{"x", x}, {"y", y}, {"coef", rational_to_string(coef)}});
    }
    return out;
}

inline nlohmann::json decision_to_json(const Preorder& p, const Decision& d) {
    nlohmann::json out;
    out["frobenius"] = d.is_frobenius;
    out["dim"] = p.comparable_count();
    if (d.is_frobenius) {
        nlohmann::json blocks = nlohmann::json::array();
        std::vector<int> sizes;
        for (const auto& cls : *d.partition) {
            blocks.push_back(cls);
            sizes.push_back(static_cast<int>(cls.size()));
        }
        std::sort(sizes.begin(), sizes.end());
        out["blocks"] = blocks;
        out["block_sizes"] = sizes;
        out["counterexample"] = nullptr;
    } else {
        out["blocks"] = nullptr;
        out["block_sizes"] = nlohmann::json::array();
        out["counterexample"] = {d.counterexample->first, d.counterexample->second};
    }
    return out;
}

inline nlohmann::json reduction_report_to_json(const std::vector<int>& representatives,
                                               int reduced_dim, int quotient_dim, bool iso_ok,
                                               bool algebra_iso_ok) {
    return nlohmann::json{{"representatives", representatives},
                          {"reduced_dim", reduced_dim},
                          {"quotient_dim", quotient_dim},
                          {"iso_ok", iso_ok},
                          {"algebra_iso_ok", algebra_iso_ok}};
}

inline nlohmann::json oracle_to_json(const OracleVerdict& v) {
    nlohmann::json out;
    out["verdict"] =
        v.verdict == OracleOutcome::Frobenius ? "frobenius" : "probably_not_frobenius";
    out["trials"] = v.trials;
    out["failure_bound"] = rational_to_string(v.failure_bound);
    if (v.witness) {
        nlohmann::json w = nlohmann::json::array();
        for (const Rational& r : *v.witness) w.push_back(rational_to_string(r));
        out["witness"] = w;
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

} // namespace frobstruct
