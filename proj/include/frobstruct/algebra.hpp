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
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frobstruct/coalgebra.hpp"
#include "frobstruct/errors.hpp"
#include "frobstruct/matrix.hpp"
#include "frobstruct/preorder.hpp"
#include "frobstruct/rational.hpp"
#include "frobstruct/rng.hpp"
#include "frobstruct/subspace.hpp"

namespace frobstruct {

/// Element of the pattern algebra: sparse coefficients over pattern positions.
struct AlgebraElem {
    std::map<int, Rational> c;

    static AlgebraElem basis(int i) {
        AlgebraElem a;
        a.c.emplace(i, 1);
        return a;
    }

    bool zero() const { return c.empty(); }
    void add(int i, const Rational& v) { detail::acc(c, i, v); }
    bool operator==(const AlgebraElem& other) const { return c == other.c; }
};

/// Matrices supported on a reflexive transitive pattern, with matrix-unit
/// multiplication. The dual algebra of the incidence coalgebra on the same
/// relation, under the pairing that matches basis positions.
class StructMatrixAlgebra {
  public:
    explicit StructMatrixAlgebra(Preorder pattern) : p_(std::move(pattern)) {
        const int n = p_.n();
        idx_.assign(std::size_t(n) * n, -1);
        basis_ = p_.comparable_pairs();
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i)
            idx_[std::size_t(basis_[i].first) * n + basis_[i].second] = i;
        for (const auto& [a, b] : basis_)
            for (const auto& [c, d] : basis_)
                if (b == c && idx_[std::size_t(a) * n + d] < 0)
                    throw std::logic_error("pattern is not closed under multiplication");
    }

    const Preorder& pattern() const { return p_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::pair<int, int>>& basis() const { return basis_; }
    const std::pair<int, int>& basis_pair(int i) const { return basis_[i]; }

    int index(int a, int b) const {
        if (!p_.leq(a, b)) throw NotComparableError(a, b);
        return idx_[std::size_t(a) * p_.n() + b];
    }

    /// Index of the product of basis units i and j, or nothing when it is zero.
    std::optional<int> product_index(int i, int j) const {
        const auto& [a, b] = basis_[i];
        const auto& [c, d] = basis_[j];
        if (b != c) return std::nullopt;
        return index(a, d);
    }

    AlgebraElem unit() const {
        AlgebraElem u;
        for (int x = 0; x < p_.n(); ++x) u.add(index(x, x), Rational(1));
        return u;
    }

    std::vector<Rational> dense(const AlgebraElem& a) const {
        std::vector<Rational> v(dim());
        for (const auto& [i, coef] : a.c) {
            if (i < 0 || i >= dim()) throw PatternViolationError("support outside the pattern");
            v[i] = coef;
        }
        return v;
    }

    AlgebraElem from_dense(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != dim())
            throw DimensionMismatchError("dense vector length differs from algebra dimension");
        AlgebraElem a;
        for (int i = 0; i < dim(); ++i) a.add(i, v[i]);
        return a;
    }

  private:
    Preorder p_;
    std::vector<std::pair<int, int>> basis_;
    std::vector<int> idx_;
};

inline StructMatrixAlgebra build_algebra(const Preorder& p) { return StructMatrixAlgebra(p); }

inline AlgebraElem multiply(const StructMatrixAlgebra& A, const AlgebraElem& a,
                            const AlgebraElem& b) {
    for (const auto& [i, coef] : a.c)
        if (i < 0 || i >= A.dim()) throw PatternViolationError("left factor outside the pattern");
    for (const auto& [i, coef] : b.c)
        if (i < 0 || i >= A.dim()) throw PatternViolationError("right factor outside the pattern");
    AlgebraElem out;
    for (const auto& [i, ci] : a.c)
        for (const auto& [j, cj] : b.c)
            if (auto k = A.product_index(i, j)) out.add(*k, ci * cj);
    return out;
}

/// Checks that convolution on the dual of the coalgebra has exactly the
/// matrix-unit structure constants of the pattern algebra.
inline bool dual_pairing_check(const StructMatrixAlgebra& A, const IncCoalgebra& C) {
    if (!(A.pattern() == C.preorder()))
        throw InvalidArgumentError("algebra and coalgebra come from different relations");
    const int d = A.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Functional conv =
                convolve(C, Functional::dual_basis(i), Functional::dual_basis(j));
            Functional expected;
            if (auto k = A.product_index(i, j)) expected.add(*k, Rational(1));
            if (!(conv == expected)) return false;
        }
    // The convolution unit must be the counit, matching the algebra unit.
    Functional unit_f;
    for (const auto& [i, coef] : A.unit().c) unit_f.add(i, coef);
    return unit_f == counit_functional(C);
}

/// Frobenius verdict with a certificate: the class partition when the
/// relation is symmetric, or the least one-sided pair when it is not.
struct Decision {
    bool is_frobenius = false;
    std::optional<std::vector<std::vector<int>>> partition;
    std::optional<std::pair<int, int>> counterexample;
};

inline Decision frobenius_decide(const Preorder& p) {
    Decision d;
    if (auto bad = p.first_one_sided_pair()) {
        d.is_frobenius = false;
        d.counterexample = *bad;
        return d;
    }
    d.is_frobenius = true;
    d.partition = equivalence_classes(p).classes;
    return d;
}

/// Sorted block sizes of a Frobenius pattern; the squares sum to the
/// pattern size.
inline std::vector<int> block_decomposition(const Preorder& p) {
    const Decision d = frobenius_decide(p);
    if (!d.is_frobenius) throw NotFrobeniusError("pattern is not a union of diagonal blocks");
    std::vector<int> sizes;
    int sq = 0;
    for (const auto& cls : *d.partition) {
        sizes.push_back(static_cast<int>(cls.size()));
        sq += static_cast<int>(cls.size() * cls.size());
    }
    std::sort(sizes.begin(), sizes.end());
    if (sq != p.comparable_count())
        throw std::logic_error("block sizes do not account for the whole pattern");
    return sizes;
}

/// Relabels the elements so classes become contiguous and checks the pattern
/// turns into literal diagonal blocks, with matching structure constants.
inline bool block_reindex_check(const Preorder& p) {
    const Decision d = frobenius_decide(p);
    if (!d.is_frobenius) throw NotFrobeniusError("pattern is not a union of diagonal blocks");
    std::vector<int> perm;
    std::vector<int> block_of;
    for (int b = 0; b < static_cast<int>(d.partition->size()); ++b)
        for (int x : (*d.partition)[b]) {
            perm.push_back(x);
            block_of.push_back(b);
        }
    const Preorder q = relabel(p, perm);
    for (int a = 0; a < q.n(); ++a)
        for (int b = 0; b < q.n(); ++b)
            if (q.leq(a, b) != (block_of[a] == block_of[b])) return false;

    const StructMatrixAlgebra A = build_algebra(p);
    const StructMatrixAlgebra B = build_algebra(q);
    for (int i = 0; i < B.dim(); ++i)
        for (int j = 0; j < B.dim(); ++j) {
            const auto& [a1, b1] = B.basis_pair(i);
            const auto& [a2, b2] = B.basis_pair(j);
            AlgebraElem lhs = multiply(B, AlgebraElem::basis(i), AlgebraElem::basis(j));
            AlgebraElem mapped;
            for (const auto& [k, coef] : lhs.c) {
                const auto& [u, v] = B.basis_pair(k);
                mapped.add(A.index(perm[u], perm[v]), coef);
            }
            const AlgebraElem direct =
                multiply(A, AlgebraElem::basis(A.index(perm[a1], perm[b1])),
                         AlgebraElem::basis(A.index(perm[a2], perm[b2])));
            if (!(mapped == direct)) return false;
        }
    return true;
}

inline Matrix gram_matrix(const StructMatrixAlgebra& A, const std::vector<Rational>& lambda) {
    if (static_cast<int>(lambda.size()) != A.dim())
        throw DimensionMismatchError("functional length differs from algebra dimension");
    Matrix g(A.dim(), A.dim());
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j)
            if (auto k = A.product_index(i, j)) g(i, j) = lambda[*k];
    return g;
}

enum class OracleOutcome { Frobenius, ProbablyNotFrobenius };

/// One-sided randomized verdict: a nonzero Gram determinant certifies the
/// Frobenius property; repeated zeros only bound the failure probability.
struct OracleVerdict {
    OracleOutcome verdict = OracleOutcome::ProbablyNotFrobenius;
    std::optional<std::vector<Rational>> witness;
    int trials = 0;
    Rational failure_bound = 0;
};

/// Samples functionals with integer coefficients in [-10^6, 10^6] and tests
/// the Gram determinant. The determinant is a polynomial of degree dim(A) in
/// the coefficients, so dim(A)/(2*10^6+1) bounds the per-trial miss rate when
/// some functional works.
inline OracleVerdict frobenius_oracle(const StructMatrixAlgebra& A, int trials,
                                      std::uint64_t seed) {
    if (trials < 1) throw InvalidArgumentError("oracle needs at least one trial");
    constexpr std::int64_t kRange = 1000000;
    SplitMix64 rng(seed);
    OracleVerdict out;
    for (int t = 1; t <= trials; ++t) {
        std::vector<Rational> lambda(A.dim());
        for (int i = 0; i < A.dim(); ++i) lambda[i] = Rational(rng.uniform(-kRange, kRange));
        if (det(gram_matrix(A, lambda)) != 0) {
            out.verdict = OracleOutcome::Frobenius;
            out.witness = std::move(lambda);
            out.trials = t;
            out.failure_bound = 0;
            return out;
        }
    }
    out.verdict = OracleOutcome::ProbablyNotFrobenius;
    out.trials = trials;
    Rational per_trial(A.dim(), 2 * kRange + 1);
    out.failure_bound = 1;
    for (int t = 0; t < trials; ++t) out.failure_bound *= per_trial;
    return out;
}

/// Trace of left multiplication by the basis unit with this index.
inline Rational left_mult_trace(const StructMatrixAlgebra& A, int i) {
    Rational tr = 0;
    for (int t = 0; t < A.dim(); ++t)
        if (auto q = A.product_index(i, t); q && *q == t) tr += 1;
    return tr;
}

/// Radical by the trace form: a is radical iff Tr(L_{ab}) vanishes for every
/// basis element b. Valid over the rationals.
inline Subspace radical_trace(const StructMatrixAlgebra& A) {
    const int d = A.dim();
    Matrix k(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (auto q = A.product_index(i, j)) k(i, j) = left_mult_trace(A, *q);
    return Subspace::kernel(k, d);
}

inline bool is_semisimple(const StructMatrixAlgebra& A) { return radical_trace(A).dim() == 0; }

/// J.M inside the coalgebra, for a right coideal M viewed as a module over
/// the dual algebra through the left action.
inline Subspace module_radical(const StructMatrixAlgebra& A, const IncCoalgebra& C,
                               const Coideal& M) {
    if (!(A.pattern() == C.preorder()))
        throw InvalidArgumentError("algebra and coalgebra come from different relations");
    if (M.side != Side::Right) throw InvalidArgumentError("module must be a right coideal");
    const Subspace J = radical_trace(A);
    std::vector<std::vector<Rational>> rows;
    for (int a = 0; a < J.dim(); ++a) {
        Functional f;
        const std::vector<Rational> fa = J.basis().row(a);
        for (int i = 0; i < A.dim(); ++i) f.add(i, fa[i]);
        for (int r = 0; r < M.space.dim(); ++r) {
            const Elem m = C.from_dense(M.space.basis().row(r));
            rows.push_back(C.dense(left_action(C, f, m)));
        }
    }
    return Subspace::span(C.dim(), rows);
}

/// Whether M has a unique maximal submodule: M/JM must be a single simple
/// module, i.e. exactly one diagonal class block acts nonzero on it and the
/// surviving dimension equals that class size.
inline bool is_local_module(const StructMatrixAlgebra& A, const IncCoalgebra& C,
                            const Coideal& M) {
    if (M.space.dim() == 0) return false;
    const Subspace JM = module_radical(A, C, M);
    const EquivClasses ec = equivalence_classes(A.pattern());
    int active = -1;
    for (int b = 0; b < ec.count(); ++b) {
        Functional cb;
        for (int x : ec.classes[b]) cb.add(A.index(x, x), Rational(1));
        std::vector<std::vector<Rational>> rows;
        for (int r = 0; r < M.space.dim(); ++r) {
            const Elem m = C.from_dense(M.space.basis().row(r));
            rows.push_back(C.dense(left_action(C, cb, m)));
        }
        const int db = Subspace::span(C.dim(), rows).sum(JM).dim() - JM.dim();
        if (db == 0) continue;
        if (active >= 0) return false; // two blocks survive in M/JM
        if (db != static_cast<int>(ec.classes[b].size())) return false;
        active = b;
    }
    return active >= 0;
}

struct LocalGenerationResult {
    bool is_local = false;
    bool generation_ok = false;
    int generators_checked = 0;
};

/// Instantiates the generation property: when M is local, every basis element
/// of M outside J.M must generate M as a right comodule. Non-local modules
/// satisfy the property vacuously.
inline LocalGenerationResult local_generation_analysis(const StructMatrixAlgebra& A,
                                                       const IncCoalgebra& C, const Coideal& M) {
    if (M.side != Side::Right) throw InvalidArgumentError("module must be a right coideal");
    if (!basis_supported_check(C, M))
        throw NotBasisSupportedError("module is not spanned by the basis elements inside it");
    LocalGenerationResult res;
    res.is_local = is_local_module(A, C, M);
    if (!res.is_local) {
        res.generation_ok = true;
        return res;
    }
    const Subspace JM = module_radical(A, C, M);
    res.generation_ok = true;
    for (int i = 0; i < C.dim(); ++i) {
        std::vector<Rational> unit(C.dim());
        unit[i] = 1;
        if (!M.space.contains(unit) || JM.contains(unit)) continue;
        ++res.generators_checked;
        if (!(generated_subcomodule(C, Elem::basis(i)).space == M.space)) {
            res.generation_ok = false;
            return res;
        }
    }
    if (res.generators_checked == 0) res.generation_ok = false;
    return res;
}

inline bool local_generation_check(const StructMatrixAlgebra& A, const IncCoalgebra& C,
                                   const Coideal& M) {
    const LocalGenerationResult res = local_generation_analysis(A, C, M);
    return !res.is_local || res.generation_ok;
}

} // namespace frobstruct
