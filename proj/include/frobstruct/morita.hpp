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
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frobstruct/algebra.hpp"
#include "frobstruct/coalgebra.hpp"
#include "frobstruct/errors.hpp"
#include "frobstruct/preorder.hpp"

namespace frobstruct {

namespace detail {
/// One representative per class, sorted; defaults to the least member.
inline std::vector<int> normalize_representatives(const EquivClasses& ec,
                                                  const std::optional<std::vector<int>>& reps) {
    std::vector<int> s;
    if (!reps) {
        for (int b = 0; b < ec.count(); ++b) s.push_back(ec.representative(b));
        return s;
    }
    if (static_cast<int>(reps->size()) != ec.count())
        throw BadRepresentativesError("need exactly one representative per class");
    std::vector<char> hit(ec.count(), 0);
    for (int r : *reps) {
        if (r < 0 || r >= static_cast<int>(ec.class_of.size()))
            throw BadRepresentativesError("representative index out of range");
        const int b = ec.class_of[r];
        if (hit[b]) throw BadRepresentativesError("two representatives share a class");
        hit[b] = 1;
    }
    s = *reps;
    std::sort(s.begin(), s.end());
    return s;
}
} // namespace detail

/// The idempotent functional supported on the diagonal of the chosen class
/// representatives.
struct BasicIdempotent {
    std::vector<int> representatives;
    Functional m;
};

inline BasicIdempotent basic_idempotent(const IncCoalgebra& C,
                                        const std::optional<std::vector<int>>& reps = {}) {
    const EquivClasses ec = equivalence_classes(C.preorder());
    BasicIdempotent out;
    out.representatives = detail::normalize_representatives(ec, reps);
    for (int u : out.representatives) out.m.add(C.index(u, u), Rational(1));
    if (!(convolve(C, out.m, out.m) == out.m))
        throw std::logic_error("diagonal class functional failed to be idempotent");
    return out;
}

/// The coalgebra carried by m->C<-m: basis pairs with both endpoints among the
/// representatives, comultiplication restricted accordingly.
class ReducedCoalgebra {
  public:
    ReducedCoalgebra(const IncCoalgebra& C, const BasicIdempotent& m)
        : original_(C.preorder()), reps_(m.representatives),
          class_of_(equivalence_classes(C.preorder()).class_of) {
        // Surviving basis: apply m to both sides of every basis vector and
        // keep the nonzero images (each is the basis vector itself).
        std::vector<int> kept(C.dim(), -1);
        for (int i = 0; i < C.dim(); ++i) {
            const Elem img = left_action(C, m.m, right_action(C, Elem::basis(i), m.m));
            if (img.zero()) continue;
            if (!(img == Elem::basis(i)))
                throw std::logic_error("two-sided idempotent action moved a basis vector");
            kept[i] = static_cast<int>(basis_.size());
            basis_.push_back(C.basis_pair(i));
        }
        // Comultiplication: push each original term through the two-sided
        // action; a term survives exactly when both legs do.
        delta_.resize(basis_.size());
        for (int i = 0; i < C.dim(); ++i) {
            if (kept[i] < 0) continue;
            for (const auto& [j, k] : C.delta_terms(i))
                if (kept[j] >= 0 && kept[k] >= 0)
                    delta_[kept[i]].emplace_back(kept[j], kept[k]);
        }
    }

    const Preorder& original() const { return original_; }
    const std::vector<int>& representatives() const { return reps_; }
    const std::vector<int>& class_of() const { return class_of_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::pair<int, int>>& basis() const { return basis_; }
    const std::pair<int, int>& basis_pair(int i) const { return basis_[i]; }
    const std::vector<std::pair<int, int>>& delta_terms(int i) const { return delta_[i]; }

    Rational counit_on(int i) const {
        return basis_[i].first == basis_[i].second ? Rational(1) : Rational(0);
    }

  private:
    Preorder original_;
    std::vector<int> reps_;
    std::vector<int> class_of_;
    std::vector<std::pair<int, int>> basis_;
    std::vector<std::vector<std::pair<int, int>>> delta_;
};

inline ReducedCoalgebra reduce(const IncCoalgebra& C, const BasicIdempotent& m) {
    return ReducedCoalgebra(C, m);
}

/// The relabeling e_{u,v} -> e_{class(u),class(v)} must be a counit-preserving
/// coalgebra isomorphism onto the incidence coalgebra of the condensation.
inline bool iso_to_quotient_check(const ReducedCoalgebra& R, const IncCoalgebra& Cq) {
    if (R.dim() != Cq.dim()) return false;
    const std::vector<int>& cls = R.class_of();
    std::vector<int> phi(R.dim());
    std::vector<char> hit(Cq.dim(), 0);
    for (int i = 0; i < R.dim(); ++i) {
        const auto& [u, v] = R.basis_pair(i);
        if (!Cq.preorder().leq(cls[u], cls[v])) return false;
        phi[i] = Cq.index(cls[u], cls[v]);
        if (hit[phi[i]]) return false;
        hit[phi[i]] = 1;
    }
    for (int i = 0; i < R.dim(); ++i) {
        std::vector<std::pair<int, int>> mapped;
        for (const auto& [j, k] : R.delta_terms(i)) mapped.emplace_back(phi[j], phi[k]);
        std::vector<std::pair<int, int>> target = Cq.delta_terms(phi[i]);
        std::sort(mapped.begin(), mapped.end());
        std::sort(target.begin(), target.end());
        if (mapped != target) return false;
        if (R.counit_on(i) != Cq.counit_on(phi[i])) return false;
    }
    return true;
}

/// Corner reduction on the algebra side: cutting by the diagonal idempotent
/// of the representatives must reproduce the pattern algebra of the
/// condensation, structure constants included.
inline bool algebra_reduction_check(const Preorder& p,
                                    const std::optional<std::vector<int>>& reps = {}) {
    const StructMatrixAlgebra A = build_algebra(p);
    const EquivClasses ec = equivalence_classes(p);
    const std::vector<int> s = detail::normalize_representatives(ec, reps);

    AlgebraElem e;
    for (int u : s) e.add(A.index(u, u), Rational(1));

    // eAe: the surviving corner units.
    std::vector<int> corner;
    for (int i = 0; i < A.dim(); ++i) {
        const AlgebraElem img = multiply(A, multiply(A, e, AlgebraElem::basis(i)), e);
        if (img.zero()) continue;
        if (!(img == AlgebraElem::basis(i)))
            throw std::logic_error("corner cut moved a basis unit");
        corner.push_back(i);
    }

    const QuotientPoset q = quotient(p);
    const StructMatrixAlgebra Aq = build_algebra(q.as_preorder());
    if (static_cast<int>(corner.size()) != q.comparable_count()) return false;
    if (Aq.dim() != static_cast<int>(corner.size())) return false;

    std::vector<int> psi(A.dim(), -1);
    std::vector<char> hit(Aq.dim(), 0);
    for (int i : corner) {
        const auto& [u, v] = A.basis_pair(i);
        if (!q.leq(ec.class_of[u], ec.class_of[v])) return false;
        psi[i] = Aq.index(ec.class_of[u], ec.class_of[v]);
        if (hit[psi[i]]) return false;
        hit[psi[i]] = 1;
    }
    for (int i : corner)
        for (int j : corner) {
            const AlgebraElem prod = multiply(A, AlgebraElem::basis(i), AlgebraElem::basis(j));
            AlgebraElem mapped;
            for (const auto& [k, coef] : prod.c) {
                if (psi[k] < 0) return false; // product escaped the corner
                mapped.add(psi[k], coef);
            }
            const AlgebraElem expected =
                multiply(Aq, AlgebraElem::basis(psi[i]), AlgebraElem::basis(psi[j]));
            if (!(mapped == expected)) return false;
        }
    return true;
}

} // namespace frobstruct
