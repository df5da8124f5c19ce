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

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "frobstruct/errors.hpp"
#include "frobstruct/matrix.hpp"
#include "frobstruct/preorder.hpp"
#include "frobstruct/rational.hpp"
#include "frobstruct/rng.hpp"
#include "frobstruct/subspace.hpp"

namespace frobstruct {

namespace detail {
template <class K>
inline void acc(std::map<K, Rational>& m, const K& key, const Rational& v) {
    if (v == 0) return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0) m.erase(it);
    }
}
} // namespace detail

/// Element of the coalgebra: sparse coefficients over basis indices.
struct Elem {
    std::map<int, Rational> c;

    static Elem basis(int i) {
        Elem e;
        e.c.emplace(i, 1);
        return e;
    }

    bool zero() const { return c.empty(); }
    void add(int i, const Rational& v) { detail::acc(c, i, v); }
    bool operator==(const Elem& other) const { return c == other.c; }
};

/// Element of C tensor C: sparse coefficients over pairs of basis indices.
struct TensorElem {
    std::map<std::pair<int, int>, Rational> c;

    bool zero() const { return c.empty(); }
    void add(int i, int j, const Rational& v) { detail::acc(c, std::make_pair(i, j), v); }
    bool operator==(const TensorElem& other) const { return c == other.c; }
};

/// Functional on C: sparse coefficients over the dual basis, indexed like the basis.
struct Functional {
    std::map<int, Rational> c;

    static Functional dual_basis(int i) {
        Functional f;
        f.c.emplace(i, 1);
        return f;
    }

    Rational at(int i) const {
        auto it = c.find(i);
        return it == c.end() ? Rational(0) : it->second;
    }

    bool zero() const { return c.empty(); }
    void add(int i, const Rational& v) { detail::acc(c, i, v); }
    bool operator==(const Functional& other) const { return c == other.c; }
};

enum class Side { Right, Left };

/// A coideal: a subspace of C closed under the matching dual-algebra action,
/// tagged with its side and whether the basis elements inside it span it.
struct Coideal {
    Subspace space;
    Side side = Side::Right;
    bool basis_supported = false;
};

/// The incidence coalgebra of a finite preorder. Basis vectors are the
/// comparable pairs (x,y) in lexicographic order; the comultiplication splits
/// a pair across its interval and the counit picks out the diagonal.
class IncCoalgebra {
  public:
    explicit IncCoalgebra(Preorder p) : p_(std::move(p)) {
        const int n = p_.n();
        idx_.assign(std::size_t(n) * n, -1);
        basis_ = p_.comparable_pairs();
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i)
            idx_[std::size_t(basis_[i].first) * n + basis_[i].second] = i;
        delta_.resize(basis_.size());
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
            const auto& [x, y] = basis_[i];
            for (int z : interval(p_, x, y))
                delta_[i].emplace_back(index(x, z), index(z, y));
        }
    }

    const Preorder& preorder() const { return p_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::pair<int, int>>& basis() const { return basis_; }
    const std::pair<int, int>& basis_pair(int i) const { return basis_[i]; }

    int index(int x, int y) const {
        if (!p_.leq(x, y)) throw NotComparableError(x, y);
        return idx_[std::size_t(x) * p_.n() + y];
    }

    const std::vector<std::pair<int, int>>& delta_terms(int i) const { return delta_[i]; }

    Rational counit_on(int i) const {
        return basis_[i].first == basis_[i].second ? Rational(1) : Rational(0);
    }

    std::vector<Rational> dense(const Elem& e) const {
        std::vector<Rational> v(dim());
        for (const auto& [i, coef] : e.c) {
            if (i < 0 || i >= dim()) throw IndexOutOfRangeError("element index outside basis");
            v[i] = coef;
        }
        return v;
    }

    Elem from_dense(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != dim())
            throw DimensionMismatchError("dense vector length differs from coalgebra dimension");
        Elem e;
        for (int i = 0; i < dim(); ++i) e.add(i, v[i]);
        return e;
    }

  private:
    Preorder p_;
    std::vector<std::pair<int, int>> basis_;
    std::vector<int> idx_;
    std::vector<std::vector<std::pair<int, int>>> delta_;
};

inline IncCoalgebra build_coalgebra(const Preorder& p) { return IncCoalgebra(p); }

inline TensorElem delta(const IncCoalgebra& C, const Elem& e) {
    TensorElem t;
    for (const auto& [i, coef] : e.c)
        for (const auto& [j, k] : C.delta_terms(i)) t.add(j, k, coef);
    return t;
}

inline Rational counit(const IncCoalgebra& C, const Elem& e) {
    Rational r = 0;
    for (const auto& [i, coef] : e.c) r += coef * C.counit_on(i);
    return r;
}

/// Coassociativity and both counit laws on every basis element. Works on any
/// coalgebra presented by basis-indexed comultiplication terms with
/// coefficient 1 (both the incidence coalgebra and its reductions).
template <class Co>
inline bool check_coalgebra_axioms(const Co& co) {
    for (int i = 0; i < co.dim(); ++i) {
        std::map<std::tuple<int, int, int>, Rational> lhs, rhs;
        for (const auto& [j, k] : co.delta_terms(i)) {
            for (const auto& [a, b] : co.delta_terms(j))
                detail::acc(lhs, std::make_tuple(a, b, k), Rational(1));
            for (const auto& [a, b] : co.delta_terms(k))
                detail::acc(rhs, std::make_tuple(j, a, b), Rational(1));
        }
        if (lhs != rhs) return false;

        std::map<int, Rational> left_counit, right_counit;
        for (const auto& [j, k] : co.delta_terms(i)) {
            detail::acc(left_counit, k, co.counit_on(j));
            detail::acc(right_counit, j, co.counit_on(k));
        }
        std::map<int, Rational> id;
        id.emplace(i, 1);
        if (left_counit != id || right_counit != id) return false;
    }
    return true;
}

/// f applied to the right tensor leg of Delta(c).
inline Elem left_action(const IncCoalgebra& C, const Functional& f, const Elem& c) {
    Elem out;
    for (const auto& [i, coef] : c.c)
        for (const auto& [j, k] : C.delta_terms(i)) out.add(j, coef * f.at(k));
    return out;
}

/// f applied to the left tensor leg of Delta(c).
inline Elem right_action(const IncCoalgebra& C, const Elem& c, const Functional& f) {
    Elem out;
    for (const auto& [i, coef] : c.c)
        for (const auto& [j, k] : C.delta_terms(i)) out.add(k, coef * f.at(j));
    return out;
}

/// Convolution product on the dual: (f*g)(c) = sum f(c_1) g(c_2).
inline Functional convolve(const IncCoalgebra& C, const Functional& f, const Functional& g) {
    Functional out;
    for (int i = 0; i < C.dim(); ++i) {
        Rational v = 0;
        for (const auto& [j, k] : C.delta_terms(i)) v += f.at(j) * g.at(k);
        out.add(i, v);
    }
    return out;
}

inline Functional counit_functional(const IncCoalgebra& C) {
    Functional eps;
    for (int i = 0; i < C.dim(); ++i) eps.add(i, C.counit_on(i));
    return eps;
}

/// Closed-form action of a dual basis functional on a basis vector: the pair
/// (x,y) acting on (u,v) gives (u,x) when y = v and u <= x, and zero otherwise.
inline Elem p_arrow(const IncCoalgebra& C, int x, int y, int u, int v) {
    const Preorder& p = C.preorder();
    if (!p.leq(x, y)) throw NotComparableError(x, y);
    if (!p.leq(u, v)) throw NotComparableError(u, v);
    if (y == v && p.leq(u, x)) return Elem::basis(C.index(u, x));
    return Elem{};
}

inline bool is_coideal(const IncCoalgebra& C, const Subspace& s, Side side) {
    if (s.ambient_dim() != C.dim())
        throw DimensionMismatchError("subspace is not inside the coalgebra");
    for (int r = 0; r < s.dim(); ++r) {
        const Elem e = C.from_dense(s.basis().row(r));
        for (int f = 0; f < C.dim(); ++f) {
            const Functional pf = Functional::dual_basis(f);
            const Elem moved = side == Side::Right ? left_action(C, pf, e)
                                                   : right_action(C, e, pf);
            if (!s.contains(C.dense(moved))) return false;
        }
    }
    return true;
}

/// True iff the basis vectors lying inside M span all of M.
inline bool basis_supported_check(const IncCoalgebra& C, const Subspace& s) {
    std::vector<std::vector<Rational>> inside;
    for (int i = 0; i < C.dim(); ++i) {
        std::vector<Rational> unit(C.dim());
        unit[i] = 1;
        if (s.contains(unit)) inside.push_back(std::move(unit));
    }
    return Subspace::span(C.dim(), inside).dim() == s.dim();
}

inline bool basis_supported_check(const IncCoalgebra& C, const Coideal& M) {
    return basis_supported_check(C, M.space);
}

inline Coideal make_coideal(const IncCoalgebra& C, Subspace s, Side side) {
    const bool supported = basis_supported_check(C, s);
    return Coideal{std::move(s), side, supported};
}

/// Smallest right coideal containing c: the span of all dual-basis actions
/// applied to c, iterated until stable.
inline Coideal generated_subcomodule(const IncCoalgebra& C, const Elem& c) {
    Subspace cur = Subspace::span(C.dim(), std::vector<std::vector<Rational>>{C.dense(c)});
    while (true) {
        std::vector<std::vector<Rational>> rows;
        for (int r = 0; r < cur.dim(); ++r) rows.push_back(cur.basis().row(r));
        const int before = cur.dim();
        for (int r = 0; r < before; ++r) {
            const Elem e = C.from_dense(rows[r]);
            for (int f = 0; f < C.dim(); ++f)
                rows.push_back(C.dense(left_action(C, Functional::dual_basis(f), e)));
        }
        Subspace next = Subspace::span(C.dim(), rows);
        if (next.dim() == before) break;
        cur = std::move(next);
    }
    return make_coideal(C, cur, Side::Right);
}

namespace detail {
inline Coideal span_pairs(const IncCoalgebra& C, const std::vector<int>& indices, Side side) {
    std::vector<std::vector<Rational>> rows;
    for (int i : indices) {
        std::vector<Rational> unit(C.dim());
        unit[i] = 1;
        rows.push_back(std::move(unit));
    }
    Coideal m;
    m.space = Subspace::span(C.dim(), rows);
    m.side = side;
    m.basis_supported = true;
    return m;
}
} // namespace detail

/// S_x: the span of e_{x,y} over the class of x; a simple right coideal.
inline Coideal simple_comodule(const IncCoalgebra& C, int x) {
    const Preorder& p = C.preorder();
    std::vector<int> idx;
    for (int y = 0; y < p.n(); ++y)
        if (p.leq(x, y) && p.leq(y, x)) idx.push_back(C.index(x, y));
    return detail::span_pairs(C, idx, Side::Right);
}

/// E_x: the span of e_{x,y} over all y >= x; the injective hull of S_x.
inline Coideal injective_envelope(const IncCoalgebra& C, int x) {
    const Preorder& p = C.preorder();
    std::vector<int> idx;
    for (int y = 0; y < p.n(); ++y)
        if (p.leq(x, y)) idx.push_back(C.index(x, y));
    return detail::span_pairs(C, idx, Side::Right);
}

/// S'_x: the span of e_{y,x} over the class of x; a simple left coideal.
inline Coideal simple_left(const IncCoalgebra& C, int x) {
    const Preorder& p = C.preorder();
    std::vector<int> idx;
    for (int y = 0; y < p.n(); ++y)
        if (p.leq(x, y) && p.leq(y, x)) idx.push_back(C.index(y, x));
    return detail::span_pairs(C, idx, Side::Left);
}

/// E'_x: the span of e_{y,x} over all y <= x.
inline Coideal injective_left(const IncCoalgebra& C, int x) {
    const Preorder& p = C.preorder();
    std::vector<int> idx;
    for (int y = 0; y < p.n(); ++y)
        if (p.leq(y, x)) idx.push_back(C.index(y, x));
    return detail::span_pairs(C, idx, Side::Left);
}

/// The filtration terms C_0 .. C_N: C_k is spanned by the pairs whose
/// interval has length at most k.
inline std::vector<Coideal> coradical_terms(const IncCoalgebra& C, int N) {
    if (N < 0) throw InvalidArgumentError("filtration index must be nonnegative");
    const Preorder& p = C.preorder();
    std::vector<int> len(C.dim());
    for (int i = 0; i < C.dim(); ++i) {
        const auto& [x, y] = C.basis_pair(i);
        len[i] = interval_length(p, x, y);
    }
    std::vector<Coideal> out;
    for (int k = 0; k <= N; ++k) {
        std::vector<int> idx;
        for (int i = 0; i < C.dim(); ++i)
            if (len[i] <= k) idx.push_back(i);
        out.push_back(detail::span_pairs(C, idx, Side::Right));
    }
    return out;
}

/// Longest interval length over the whole preorder; the filtration reaches C
/// at this index.
inline int max_interval_length(const IncCoalgebra& C) {
    int L = 0;
    for (int i = 0; i < C.dim(); ++i) {
        const auto& [x, y] = C.basis_pair(i);
        const int l = interval_length(C.preorder(), x, y);
        if (l > L) L = l;
    }
    return L;
}

/// M intersected with the coradical; equals the sum of the simple
/// subcomodules of M.
inline Coideal socle(const IncCoalgebra& C, const Coideal& M) {
    if (M.side != Side::Right || !is_coideal(C, M.space, Side::Right))
        throw NotACoidealError("socle needs a right coideal");
    const Coideal c0 = coradical_terms(C, 0).front();
    return make_coideal(C, M.space.intersect(c0.space), Side::Right);
}

/// The wedge of U and V: the preimage of U (x) C + C (x) V under the
/// comultiplication. The preimage is computed through the annihilator of the
/// target, which factors as ann(U) (x) ann(V); each factor pair composed with
/// the comultiplication gives one linear constraint on C.
inline Subspace wedge(const IncCoalgebra& C, const Subspace& U, const Subspace& V) {
    const int d = C.dim();
    if (U.ambient_dim() != d || V.ambient_dim() != d)
        throw DimensionMismatchError("wedge arguments must live inside the coalgebra");
    const Subspace annU = U.annihilator();
    const Subspace annV = V.annihilator();
    Matrix rows(annU.dim() * annV.dim(), d);
    int r = 0;
    for (int a = 0; a < annU.dim(); ++a) {
        const std::vector<Rational> phi = annU.basis().row(a);
        for (int b = 0; b < annV.dim(); ++b) {
            const std::vector<Rational> psi = annV.basis().row(b);
            for (int t = 0; t < d; ++t) {
                Rational v = 0;
                for (const auto& [j, k] : C.delta_terms(t)) v += phi[j] * psi[k];
                rows(r, t) = v;
            }
            ++r;
        }
    }
    return Subspace::kernel(rows, d);
}

inline bool is_cosemisimple(const IncCoalgebra& C) {
    return coradical_terms(C, 0).front().space.dim() == C.dim();
}

/// Samples random nonzero elements of E_x (plus every single basis element of
/// E_x) and checks each generates a subcomodule meeting S_x. Small integer
/// coefficients, reproducible from the seed.
inline bool essential_check(const IncCoalgebra& C, int x, int trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidArgumentError("essential check needs at least one trial");
    const Preorder& p = C.preorder();
    std::vector<int> ex;
    for (int y = 0; y < p.n(); ++y)
        if (p.leq(x, y)) ex.push_back(C.index(x, y));
    const Coideal S = simple_comodule(C, x);

    std::vector<Elem> probes;
    for (int i : ex) probes.push_back(Elem::basis(i));
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Elem z;
        do {
            z = Elem{};
            for (int i : ex) z.add(i, Rational(rng.uniform(-9, 9)));
        } while (z.zero());
        probes.push_back(std::move(z));
    }

    for (const Elem& z : probes) {
        const Coideal g = generated_subcomodule(C, z);
        if (g.space.intersect(S.space).dim() == 0) return false;
    }
    return true;
}

/// Verifies that transposing the left dual-algebra action on S_v matches the
/// right action on the mirrored simple left coideal S'_v, under the pairing
/// that sends the dual vector of e_{v,z} to e_{z,v}.
inline bool simple_dual_iso_check(const IncCoalgebra& C, int v) {
    const Preorder& p = C.preorder();
    if (v < 0 || v >= p.n()) throw IndexOutOfRangeError("element index out of range");
    std::vector<int> cls;
    for (int w = 0; w < p.n(); ++w)
        if (p.leq(v, w) && p.leq(w, v)) cls.push_back(w);
    const int k = static_cast<int>(cls.size());

    for (int f = 0; f < C.dim(); ++f) {
        const Functional pf = Functional::dual_basis(f);
        // acted[j] = pf applied to e_{v, cls[j]} by the left action, expanded
        // over the S_v basis.
        std::vector<std::vector<Rational>> acted(k, std::vector<Rational>(k));
        for (int j = 0; j < k; ++j) {
            const Elem moved = left_action(C, pf, Elem::basis(C.index(v, cls[j])));
            for (const auto& [idx, coef] : moved.c) {
                const auto& [a, b] = C.basis_pair(idx);
                if (a != v) return false; // left action must stay inside S_v
                int col = -1;
                for (int t = 0; t < k; ++t)
                    if (cls[t] == b) col = t;
                if (col < 0) return false;
                acted[j][col] = coef;
            }
        }
        for (int i = 0; i < k; ++i) {
            // Dual vector of e_{v, cls[i]} acted on by pf, mapped through the
            // pairing: coefficient j is the e_{v,cls[i]}-component of
            // pf moved e_{v,cls[j]}.
            Elem mapped;
            for (int j = 0; j < k; ++j) mapped.add(C.index(cls[j], v), acted[j][i]);
            const Elem direct = right_action(C, Elem::basis(C.index(cls[i], v)), pf);
            if (!(mapped == direct)) return false;
        }
    }
    return true;
}

} // namespace frobstruct
