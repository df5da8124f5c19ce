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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "frobstruct/frobstruct.hpp"
#include "frobstruct/json_io.hpp"

using namespace frobstruct;

namespace {

// Raised via FROBSTRUCT_MAX_N; enumeration and selftest refuse larger inputs
// so a typo cannot start a multi-hour sweep.
int enumeration_cap() {
    if (const char* env = std::getenv("FROBSTRUCT_MAX_N")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid FROBSTRUCT_MAX_N value\n";
    }
    return 4;
}

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw IoFailure("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

std::string class_list(const EquivClasses& ec) {
    std::string out;
    for (const auto& cls : ec.classes) {
        out += out.empty() ? "{" : " {";
        for (std::size_t i = 0; i < cls.size(); ++i)
            out += (i ? "," : "") + std::to_string(cls[i]);
        out += "}";
    }
    return out;
}

void emit(const nlohmann::json& j, bool text, const std::string& text_form) {
    if (text)
        std::cout << text_form << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

int cmd_validate(const std::string& input, bool text) {
    const Preorder p = preorder_from_string(read_input(input));
    const EquivClasses ec = equivalence_classes(p);
    nlohmann::json j{{"ok", true},
                     {"n", p.n()},
                     {"comparable_pairs", p.comparable_count()},
                     {"classes", ec.classes},
                     {"canonical", preorder_to_json(p)}};
    std::ostringstream t;
    t << "valid preorder on " << p.n() << " vertices; " << p.comparable_count()
      << " comparable pairs; " << ec.count() << " classes: " << class_list(ec);
    emit(j, text, t.str());
    return 0;
}

int cmd_quotient(const std::string& input, bool text) {
    const Preorder p = preorder_from_string(read_input(input));
    const QuotientPoset q = quotient(p);
    const Preorder qp = q.as_preorder();
    std::ostringstream t;
    t << "condensation has " << q.m << " vertices and " << q.comparable_count()
      << " comparable pairs";
    emit(preorder_to_json(qp), text, t.str());
    return 0;
}

int cmd_coalgebra(const std::string& input, bool text) {
    const Preorder p = preorder_from_string(read_input(input));
    const IncCoalgebra C(p);
    const bool axioms = check_coalgebra_axioms(C);
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& [x, y] : C.basis()) basis.push_back({x, y});
    nlohmann::json j{{"dim", C.dim()}, {"basis", basis}, {"axioms_ok", axioms}};
    std::ostringstream t;
    t << "incidence coalgebra of dimension " << C.dim() << "; coassociativity and counit laws "
      << (axioms ? "hold" : "FAIL");
    emit(j, text, t.str());
    return axioms ? 0 : 1;
}

int cmd_filtration(const std::string& input, bool text) {
    const Preorder p = preorder_from_string(read_input(input));
    const IncCoalgebra C(p);
    const StructMatrixAlgebra A = build_algebra(p);
    const int L = max_interval_length(C);
    const auto terms = coradical_terms(C, L);

    std::vector<int> by_length;
    for (const auto& term : terms) by_length.push_back(term.space.dim());

    std::vector<int> by_wedge;
    bool equal = true;
    Subspace cur = terms.front().space;
    by_wedge.push_back(cur.dim());
    for (int k = 1; k <= L; ++k) {
        cur = wedge(C, terms.front().space, cur);
        by_wedge.push_back(cur.dim());
        equal = equal && cur == terms[k].space;
    }

    nlohmann::json j{{"dims_length", by_length}, {"dims_wedge", by_wedge}, {"equal", equal}};
    std::ostringstream t;
    t << "filtration dims by segment length:";
    for (int d : by_length) t << " " << d;
    t << "; by wedge:";
    for (int d : by_wedge) t << " " << d;
    t << "; " << (equal ? "terms agree as subspaces" : "TERMS DIFFER");
    emit(j, text, t.str());
    return equal ? 0 : 1;
}

int cmd_frobenius(const std::string& input, bool text, bool oracle, int trials,
                  std::uint64_t seed) {
    const Preorder p = preorder_from_string(read_input(input));
    const Decision d = frobenius_decide(p);
    nlohmann::json j = decision_to_json(p, d);

    std::ostringstream t;
    if (d.is_frobenius) {
        t << "Frobenius: YES — the relation is a union of full blocks " << "(classes "
          << class_list(equivalence_classes(p)) << "); matrix block sizes:";
        for (int s : block_decomposition(p)) t << " " << s;
    } else {
        t << "Frobenius: NO — comparability is one-sided at pair (" << d.counterexample->first
          << "," << d.counterexample->second << ")";
    }

    if (oracle) {
        const StructMatrixAlgebra A = build_algebra(p);
        const OracleVerdict ov = frobenius_oracle(A, trials, seed);
        const int radical_dim = radical_trace(A).dim();
        const bool oracle_yes = ov.verdict == OracleOutcome::Frobenius;
        const bool agreement =
            d.is_frobenius == oracle_yes && d.is_frobenius == (radical_dim == 0);
        j["oracle"] = oracle_to_json(ov);
        j["radical_dim"] = radical_dim;
        j["agreement"] = agreement;
        t << "\nrandomized pairing: "
          << (oracle_yes ? "nondegenerate functional found" : "probably degenerate")
          << " after " << ov.trials << " trial(s)";
        if (!oracle_yes)
            t << " (false-negative probability at most " << rational_to_string(ov.failure_bound)
              << ")";
        t << "\ntrace-form radical dimension: " << radical_dim;
        t << "\nall verdicts agree: " << (agreement ? "yes" : "NO");
    }
    emit(j, text, t.str());
    return 0;
}

int cmd_reduce(const std::string& input, bool text, const std::vector<int>& reps_flag) {
    const Preorder p = preorder_from_string(read_input(input));
    const IncCoalgebra C(p);
    const std::optional<std::vector<int>> reps =
        reps_flag.empty() ? std::nullopt : std::make_optional(reps_flag);
    const BasicIdempotent m = basic_idempotent(C, reps);
    const ReducedCoalgebra R = reduce(C, m);
    const QuotientPoset q = quotient(p);
    const bool iso = iso_to_quotient_check(R, IncCoalgebra(q.as_preorder()));
    const bool alg = algebra_reduction_check(p, reps);
    const nlohmann::json j = reduction_report_to_json(m.representatives, R.dim(),
                                                      q.comparable_count(), iso, alg);
    std::ostringstream t;
    t << "representatives:";
    for (int r : m.representatives) t << " " << r;
    t << "; reduced dimension " << R.dim() << " (condensation has " << q.comparable_count()
      << " comparable pairs)";
    t << "\ncoalgebra isomorphic to the condensation coalgebra: " << (iso ? "yes" : "NO");
    t << "\ncorner algebra isomorphic to the condensation algebra: " << (alg ? "yes" : "NO");
    emit(j, text, t.str());
    return iso && alg ? 0 : 1;
}

int cmd_enumerate(int n, bool text) {
    const auto stream = enumerate_preorders(n, enumeration_cap());
    if (text) {
        for (const auto& p : stream) std::cout << preorder_to_json(p).dump() << "\n";
        std::cout << stream.size() << " preorders\n";
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : stream) arr.push_back(preorder_to_json(p));
        std::cout << nlohmann::json{{"n", n},
                                    {"count", stream.size()},
                                    {"preorders", arr}}
                         .dump(2)
                  << "\n";
    }
    return 0;
}

int cmd_selftest(int n) {
    if (n > enumeration_cap())
        throw BoundExceededError("selftest size exceeds the enumeration cap; "
                                 "set FROBSTRUCT_MAX_N to raise it");
    const SelftestReport rep = run_selftest(n, std::cout);
    std::cout << (rep.ok ? "selftest passed" : "selftest FAILED") << " (" << rep.preorders
              << " preorders)\n";
    return rep.ok ? 0 : 1;
}

nlohmann::json error_to_json(const std::exception& e) {
    nlohmann::json j{{"message", e.what()}};
    if (const auto* nt = dynamic_cast<const NotTransitiveError*>(&e)) {
        j["type"] = "not_transitive";
        j["witness"] = {nt->x(), nt->y(), nt->z()};
    } else if (const auto* nc = dynamic_cast<const NotComparableError*>(&e)) {
        j["type"] = "not_comparable";
        j["pair"] = {nc->x(), nc->y()};
    } else if (dynamic_cast<const IndexOutOfRangeError*>(&e)) {
        j["type"] = "index_out_of_range";
    } else if (dynamic_cast<const BoundExceededError*>(&e)) {
        j["type"] = "bound_exceeded";
    } else if (dynamic_cast<const BadRepresentativesError*>(&e)) {
        j["type"] = "bad_representatives";
    } else if (dynamic_cast<const NotFrobeniusError*>(&e)) {
        j["type"] = "not_frobenius";
    } else if (dynamic_cast<const ParseError*>(&e)) {
        j["type"] = "parse";
    } else {
        j["type"] = "invariant_violation";
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius structure decisions for incidence coalgebras and "
                 "structural matrix algebras over exact rationals"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string input = "-";
    int n_enumerate = 0;
    int n_selftest = 4;
    bool oracle = false;
    int trials = 20;
    std::uint64_t seed = 0;
    std::vector<int> reps;

    auto add_input = [&input](CLI::App* sub) {
        sub->add_option("input", input, "Preorder JSON file, or - for stdin")
            ->required();
    };

    add_input(app.add_subcommand("validate", "Parse a relation and report its class structure"));
    add_input(app.add_subcommand("quotient", "Emit the condensation as a preorder document"));
    add_input(app.add_subcommand("coalgebra", "Report coalgebra dimensions and axiom checks"));
    add_input(app.add_subcommand("filtration",
                                 "Compare the length filtration with the wedge chain"));

    CLI::App* frob = app.add_subcommand("frobenius", "Decide the Frobenius property");
    add_input(frob);
    frob->add_flag("--oracle", oracle, "Also run the randomized pairing and radical oracles");
    frob->add_option("--trials", trials, "Random functionals to try")->capture_default_str();
    frob->add_option("--seed", seed, "Random seed")->capture_default_str();

    CLI::App* red = app.add_subcommand("reduce", "Compress every class to one representative");
    add_input(red);
    red->add_option("--reps", reps, "Class representatives, comma separated")->delimiter(',');

    CLI::App* en = app.add_subcommand("enumerate", "Stream every preorder of a given size");
    en->add_option("--n", n_enumerate, "Number of vertices")->required();

    CLI::App* st = app.add_subcommand("selftest", "Run the exhaustive invariant suite");
    st->add_option("--n", n_selftest, "Largest vertex count to sweep")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool text = format == "text";
    try {
        if (app.got_subcommand("validate")) return cmd_validate(input, text);
        if (app.got_subcommand("quotient")) return cmd_quotient(input, text);
        if (app.got_subcommand("coalgebra")) return cmd_coalgebra(input, text);
        if (app.got_subcommand("filtration")) return cmd_filtration(input, text);
        if (app.got_subcommand("frobenius"))
            return cmd_frobenius(input, text, oracle, trials, seed);
        if (app.got_subcommand("reduce")) return cmd_reduce(input, text, reps);
        if (app.got_subcommand("enumerate")) return cmd_enumerate(n_enumerate, text);
        if (app.got_subcommand("selftest")) return cmd_selftest(n_selftest);
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << error_to_json(e).dump() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << error_to_json(e).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
