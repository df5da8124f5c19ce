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
#include <atomic>
#include <cstdint>
#include <ostream>
#include <thread>
#include <utility>
#include <vector>

#include "frobstruct/algebra.hpp"
#include "frobstruct/coalgebra.hpp"
#include "frobstruct/matrix.hpp"
#include "frobstruct/morita.hpp"
#include "frobstruct/preorder.hpp"
#include "frobstruct/rng.hpp"
#include "frobstruct/subspace.hpp"

namespace frobstruct {

/// Runs f on every item, fanning out across hardware threads; true iff every
/// call returned true. f must be safe to call concurrently on distinct items.
template <class Item, class F>
inline bool parallel_all(const std::vector<Item>& items, F&& f) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>({workers, 16u, static_cast<unsigned>(items.size()) + 1});
    std::atomic<std::size_t> next{0};
    std::atomic<bool> ok{true};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            while (ok.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1);
                if (i >= items.size()) break;
                if (!f(items[i])) ok.store(false, std::memory_order_relaxed);
            }
        });
    for (auto& th : pool) th.join();
    return ok.load();
}

/// Transitivity filter over every off-diagonal bit pattern; the slow oracle
/// the depth-first enumerator is validated against. Feasible for n <= 5.
inline std::vector<std::uint64_t> brute_force_mask_keys(int n) {
    if (n < 1) throw InvalidArgumentError("preorder needs at least one element");
    if (n > 5) throw BoundExceededError("brute-force filter supports up to 5 elements");
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) cells.emplace_back(x, y);
    const int m = static_cast<int>(cells.size());
    std::vector<std::uint64_t> keys;
    std::vector<char> rel(std::size_t(n) * n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::fill(rel.begin(), rel.end(), 0);
        for (int x = 0; x < n; ++x) rel[std::size_t(x) * n + x] = 1;
        for (int c = 0; c < m; ++c)
            if (mask & (std::uint64_t(1) << c))
                rel[std::size_t(cells[c].first) * n + cells[c].second] = 1;
        bool transitive = true;
        for (int x = 0; x < n && transitive; ++x)
            for (int y = 0; y < n && transitive; ++y) {
                if (!rel[std::size_t(x) * n + y]) continue;
                for (int z = 0; z < n; ++z)
                    if (rel[std::size_t(y) * n + z] && !rel[std::size_t(x) * n + z]) {
                        transitive = false;
                        break;
                    }
            }
        if (!transitive) continue;
        std::uint64_t key = 0;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (rel[std::size_t(x) * n + y]) key |= std::uint64_t(1) << (x * n + y);
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

inline std::uint64_t brute_force_count(int n) { return brute_force_mask_keys(n).size(); }

/// The enumerator must produce exactly the brute-force set, each relation once.
inline bool enumeration_matches_bruteforce(int n) {
    PreorderEnumerator en(n);
    std::vector<std::uint64_t> keys;
    while (auto p = en.next()) keys.push_back(p->mask_key());
    std::vector<std::uint64_t> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    return sorted == brute_force_mask_keys(n);
}

/// Randomized subspace arithmetic properties: canonical-form round trip,
/// the dimension formula for sums and intersections, and preimages
/// containing kernels.
inline bool check_linalg_properties(std::uint64_t seed, int iterations = 40) {
    SplitMix64 rng(seed);
    for (int it = 0; it < iterations; ++it) {
        const int d = 2 + static_cast<int>(rng.uniform(0, 4));
        auto random_subspace = [&] {
            const int rows = static_cast<int>(rng.uniform(0, d));
            std::vector<std::vector<Rational>> gens(rows, std::vector<Rational>(d));
            for (auto& row : gens)
                for (auto& v : row)
                    v = Rational(rng.uniform(-6, 6), 1 + rng.uniform(0, 3));
            return Subspace::span(d, gens);
        };
        const Subspace u = random_subspace();
        const Subspace v = random_subspace();

        std::vector<std::vector<Rational>> rebuilt_rows;
        for (int r = 0; r < u.dim(); ++r) rebuilt_rows.push_back(u.basis().row(r));
        if (!(Subspace::span(d, rebuilt_rows) == u)) return false;

        const Subspace s = u.sum(v);
        const Subspace i = u.intersect(v);
        if (s.dim() + i.dim() != u.dim() + v.dim()) return false;
        if (!s.contains(u) || !s.contains(v) || !u.contains(i) || !v.contains(i)) return false;

        Matrix map(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) map(r, c) = Rational(rng.uniform(-4, 4));
        const Subspace pre = Subspace::preimage(map, v);
        if (!pre.contains(Subspace::kernel(map, d))) return false;
        for (int r = 0; r < pre.dim(); ++r)
            if (!v.contains(map.apply(pre.basis().row(r)))) return false;
    }
    return true;
}

inline bool check_preorder_suite(const Preorder& p) {
    const int n = p.n();
    const auto pairs = p.comparable_pairs();
    if (!(build_preorder(n, pairs, BuildMode::Closure) == p)) return false;
    if (!(build_preorder(n, pairs, BuildMode::Verify) == p)) return false;

    const EquivClasses ec = equivalence_classes(p);
    const QuotientPoset q = quotient(p); // constructor verifies antisymmetry
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (q.leq(ec.class_of[x], ec.class_of[y]) != p.leq(x, y)) return false;

    for (const auto& [x, y] : pairs)
        if ((interval_length(p, x, y) == 0) != (ec.class_of[x] == ec.class_of[y])) return false;
    for (int x = 0; x < n; ++x)
        if (interval(p, x, x) != ec.classes[ec.class_of[x]]) return false;
    return true;
}

inline bool check_coalgebra_suite(const Preorder& p, int trials, std::uint64_t seed) {
    const IncCoalgebra C(p);
    if (C.dim() != p.comparable_count()) return false;
    if (!check_coalgebra_axioms(C)) return false;

    for (int i = 0; i < C.dim(); ++i) {
        const auto& [x, y] = C.basis_pair(i);
        for (int j = 0; j < C.dim(); ++j) {
            const auto& [u, v] = C.basis_pair(j);
            if (!(p_arrow(C, x, y, u, v) ==
                  left_action(C, Functional::dual_basis(i), Elem::basis(j))))
                return false;
        }
    }

    int envelope_total = 0;
    for (int x = 0; x < p.n(); ++x) envelope_total += injective_envelope(C, x).space.dim();
    if (envelope_total != C.dim()) return false;

    for (int i = 0; i < C.dim(); ++i) {
        const auto& [u, v] = C.basis_pair(i);
        const Coideal g = generated_subcomodule(C, Elem::basis(i));
        std::vector<int> expected;
        for (int z : interval(p, u, v)) expected.push_back(C.index(u, z));
        if (g.space.dim() != static_cast<int>(expected.size())) return false;
        if (!g.basis_supported) return false;
        for (int e : expected) {
            std::vector<Rational> unit(C.dim());
            unit[e] = 1;
            if (!g.space.contains(unit)) return false;
        }
    }

    for (int x = 0; x < p.n(); ++x) {
        if (!(socle(C, injective_envelope(C, x)).space == simple_comodule(C, x).space))
            return false;
        if (!essential_check(C, x, trials, seed)) return false;
        if (!simple_dual_iso_check(C, x)) return false;
    }

    const bool symmetric = !p.first_one_sided_pair().has_value();
    return is_cosemisimple(C) == symmetric;
}

namespace detail {
/// Matrix of the left dual-action of f on the coalgebra basis.
inline Matrix left_action_matrix(const IncCoalgebra& C, const Functional& f) {
    Matrix m(C.dim(), C.dim());
    for (int j = 0; j < C.dim(); ++j) {
        const Elem col = left_action(C, f, Elem::basis(j));
        for (const auto& [i, coef] : col.c) m(i, j) = coef;
    }
    return m;
}
} // namespace detail

/// The filtration computed from interval lengths must match the wedge chain
/// seeded by the socle of the whole coalgebra, where that socle is obtained
/// from the trace-form radical of the dual algebra rather than from lengths.
inline bool check_filtration(const Preorder& p) {
    const IncCoalgebra C(p);
    const StructMatrixAlgebra A = build_algebra(p);
    const int L = max_interval_length(C);
    const std::vector<Coideal> terms = coradical_terms(C, L);
    if (terms.back().space.dim() != C.dim()) return false;

    const Subspace J = radical_trace(A);
    Matrix stacked(J.dim() * C.dim(), C.dim());
    for (int a = 0; a < J.dim(); ++a) {
        Functional f;
        const std::vector<Rational> fa = J.basis().row(a);
        for (int i = 0; i < A.dim(); ++i) f.add(i, fa[i]);
        const Matrix mf = detail::left_action_matrix(C, f);
        for (int r = 0; r < C.dim(); ++r)
            for (int c = 0; c < C.dim(); ++c) stacked(a * C.dim() + r, c) = mf(r, c);
    }
    const Subspace socle_by_radical = Subspace::kernel(stacked, C.dim());
    if (!(socle_by_radical == terms.front().space)) return false;

    Subspace cur = socle_by_radical;
    for (int k = 1; k <= L; ++k) {
        cur = wedge(C, socle_by_radical, cur);
        if (!(cur == terms[k].space)) return false;
    }
    return true;
}

inline bool check_algebra_suite(const Preorder& p, int trials, std::uint64_t seed) {
    const StructMatrixAlgebra A = build_algebra(p);
    const IncCoalgebra C(p);
    const int d = A.dim();

    for (int i = 0; i < d; ++i) {
        const AlgebraElem bi = AlgebraElem::basis(i);
        if (!(multiply(A, A.unit(), bi) == bi) || !(multiply(A, bi, A.unit()) == bi))
            return false;
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const AlgebraElem bj = AlgebraElem::basis(j), bk = AlgebraElem::basis(k);
                if (!(multiply(A, multiply(A, bi, bj), bk) ==
                      multiply(A, bi, multiply(A, bj, bk))))
                    return false;
            }
    }

    if (!dual_pairing_check(A, C)) return false;

    const Decision dec = frobenius_decide(p);
    const bool semisimple = is_semisimple(A);
    const OracleVerdict ov = frobenius_oracle(A, trials, seed);
    if (dec.is_frobenius != semisimple) return false;
    if (dec.is_frobenius != (ov.verdict == OracleOutcome::Frobenius)) return false;
    if (dec.is_frobenius != is_cosemisimple(C)) return false;

    if (dec.is_frobenius) {
        const std::vector<int> sizes = block_decomposition(p);
        int sq = 0;
        for (int s : sizes) sq += s * s;
        if (sq != d) return false;
        if (!block_reindex_check(p)) return false;
        if (!ov.witness || det(gram_matrix(A, *ov.witness)) == 0) return false;
    } else {
        const auto& [x, y] = *dec.counterexample;
        if (!p.leq(x, y) || p.leq(y, x)) return false;
        if (ov.failure_bound <= 0 || ov.failure_bound >= 1) return false;
    }

    const Subspace J = radical_trace(A);
    for (int r = 0; r < J.dim(); ++r) {
        const AlgebraElem jr = A.from_dense(J.basis().row(r));
        for (int i = 0; i < d; ++i) {
            if (!J.contains(A.dense(multiply(A, AlgebraElem::basis(i), jr)))) return false;
            if (!J.contains(A.dense(multiply(A, jr, AlgebraElem::basis(i))))) return false;
        }
    }

    for (int x = 0; x < p.n(); ++x) {
        if (!local_generation_check(A, C, injective_envelope(C, x))) return false;
        if (!local_generation_check(A, C, simple_comodule(C, x))) return false;
    }
    return true;
}

/// Every way of picking one representative per class.
inline std::vector<std::vector<int>> all_representative_choices(const EquivClasses& ec) {
    std::vector<std::vector<int>> out{{}};
    for (int b = 0; b < ec.count(); ++b) {
        std::vector<std::vector<int>> grown;
        for (const auto& partial : out)
            for (int member : ec.classes[b]) {
                std::vector<int> ext = partial;
                ext.push_back(member);
                grown.push_back(std::move(ext));
            }
        out = std::move(grown);
    }
    return out;
}

inline bool check_morita_suite(const Preorder& p) {
    const IncCoalgebra C(p);
    const EquivClasses ec = equivalence_classes(p);
    const QuotientPoset q = quotient(p);
    const IncCoalgebra Cq(q.as_preorder());

    for (const auto& reps : all_representative_choices(ec)) {
        const BasicIdempotent m = basic_idempotent(C, reps);
        const ReducedCoalgebra R = reduce(C, m);
        if (R.dim() != q.comparable_count()) return false;
        if (!check_coalgebra_axioms(R)) return false;
        if (!iso_to_quotient_check(R, Cq)) return false;
        if (!algebra_reduction_check(p, reps)) return false;
    }
    return true;
}

struct SelftestReport {
    bool ok = true;
    int preorders = 0;
};

/// The full exhaustive sweep for every n up to max_n. Enumeration is checked
/// against the brute-force filter where that filter is feasible; the wedge
/// comparison switches off above n = 5 (with a note) because its cost grows
/// with the square of the coalgebra dimension.
inline SelftestReport run_selftest(int max_n, std::ostream& log, int trials = 20,
                                   std::uint64_t seed = 0) {
    SelftestReport rep;

    const bool linalg_ok = check_linalg_properties(seed);
    log << "subspace arithmetic properties: " << (linalg_ok ? "ok" : "FAILED") << "\n";
    rep.ok = rep.ok && linalg_ok;

    for (int n = 1; n <= max_n; ++n) {
        PreorderEnumerator en(n);
        std::vector<Preorder> items;
        while (auto p = en.next()) items.push_back(std::move(*p));
        rep.preorders += static_cast<int>(items.size());

        bool count_ok = true;
        if (n <= 5) {
            count_ok = enumeration_matches_bruteforce(n);
            log << "n=" << n << ": " << items.size() << " preorders, brute-force filter "
                << (count_ok ? "agrees" : "DISAGREES") << "\n";
        } else {
            log << "n=" << n << ": " << items.size()
                << " preorders (brute-force filter skipped above n=5)\n";
        }
        rep.ok = rep.ok && count_ok;

        const bool use_wedge = n <= 5;
        if (!use_wedge)
            log << "n=" << n << ": wedge filtration comparison disabled above n=5\n";

        const bool sweep_ok = parallel_all(items, [&](const Preorder& p) {
            if (!check_preorder_suite(p)) return false;
            if (!check_coalgebra_suite(p, trials, seed)) return false;
            if (use_wedge && !check_filtration(p)) return false;
            if (!check_algebra_suite(p, trials, seed)) return false;
            if (!check_morita_suite(p)) return false;
            return true;
        });
        log << "n=" << n << ": invariant sweep " << (sweep_ok ? "passed" : "FAILED") << "\n";
        rep.ok = rep.ok && sweep_ok;
    }
    return rep;
}

} // namespace frobstruct
