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

#include <utility>
#include <vector>

#include "frobstruct/errors.hpp"
#include "frobstruct/matrix.hpp"
#include "frobstruct/rational.hpp"

namespace frobstruct {

/// A linear subspace of k^n, stored as the reduced row-echelon basis of its
/// row space. The stored form is canonical: two Subspace values compare equal
/// exactly when they describe the same subspace.
class Subspace {
  public:
    Subspace() : ambient_(0) {}

    explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {
        if (ambient_dim < 0) throw InvalidArgumentError("negative ambient dimension");
    }

    /// Span of the rows of `gens` inside k^ambient.
    static Subspace span(int ambient_dim, const Matrix& gens) {
        if (gens.rows() > 0 && gens.cols() != ambient_dim)
            throw DimensionMismatchError("generator width differs from ambient dimension");
        Subspace s(ambient_dim);
        Echelon e = rref(gens);
        Matrix basis(e.rank, ambient_dim);
        for (int i = 0; i < e.rank; ++i)
            for (int j = 0; j < ambient_dim; ++j) basis(i, j) = e.reduced(i, j);
        s.basis_ = std::move(basis);
        return s;
    }

    static Subspace span(int ambient_dim, const std::vector<std::vector<Rational>>& gens) {
        if (gens.empty()) return Subspace(ambient_dim);
        return span(ambient_dim, Matrix::from_rows(gens));
    }

    static Subspace full(int ambient_dim) {
        return span(ambient_dim, Matrix::identity(ambient_dim));
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != ambient_)
            throw DimensionMismatchError("vector outside ambient space");
        std::vector<Rational> r = v;
        for (int i = 0; i < basis_.rows(); ++i) {
            int p = pivot_col(i);
            if (r[p] == 0) continue;
            const Rational f = r[p];
            for (int j = p; j < ambient_; ++j)
                if (basis_(i, j) != 0) r[j] -= f * basis_(i, j);
        }
        for (const Rational& x : r)
            if (x != 0) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_)
            throw DimensionMismatchError("subspaces of different ambient spaces");
        for (int i = 0; i < other.basis_.rows(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        if (other.ambient_ != ambient_)
            throw DimensionMismatchError("subspaces of different ambient spaces");
        Matrix stacked(dim() + other.dim(), ambient_);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < ambient_; ++j) stacked(i, j) = basis_(i, j);
        for (int i = 0; i < other.dim(); ++i)
            for (int j = 0; j < ambient_; ++j) stacked(dim() + i, j) = other.basis_(i, j);
        return span(ambient_, stacked);
    }

    /// Functionals vanishing on this subspace, as a subspace of the dual k^n.
    Subspace annihilator() const { return kernel(basis_, ambient_); }

    Subspace intersect(const Subspace& other) const {
        if (other.ambient_ != ambient_)
            throw DimensionMismatchError("subspaces of different ambient spaces");
        // ann(U + V) = ann(U) meet ann(V), so intersect through annihilators.
        return annihilator().sum(other.annihilator()).annihilator();
    }

    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

    /// Kernel of the linear map given by `m` acting on column vectors of
    /// length `domain_dim` (equal to m.cols(); passed for interface clarity).
    static Subspace kernel(const Matrix& m, int domain_dim) {
        if (m.cols() != domain_dim && m.rows() != 0)
            throw DimensionMismatchError("kernel domain mismatch");
        const Echelon e = rref(m);
        std::vector<bool> is_pivot(domain_dim, false);
        for (int p : e.pivots) is_pivot[p] = true;
        std::vector<std::vector<Rational>> gens;
        for (int c = 0; c < domain_dim; ++c) {
            if (is_pivot[c]) continue;
            std::vector<Rational> v(domain_dim);
            v[c] = 1;
            for (int p = 0; p < e.rank; ++p) v[e.pivots[p]] = -e.reduced(p, c);
            gens.push_back(std::move(v));
        }
        return span(domain_dim, gens);
    }

    /// Preimage of `target` under the map x -> m x.
    static Subspace preimage(const Matrix& m, const Subspace& target) {
        if (m.rows() != target.ambient_dim())
            throw DimensionMismatchError("preimage codomain mismatch");
        // x lands in the target iff every functional annihilating the target
        // kills m x, i.e. x lies in the kernel of ann(target)^T compose m.
        const Subspace ann = target.annihilator();
        return kernel(ann.basis() * m, m.cols());
    }

  private:
    int pivot_col(int row) const {
        for (int j = 0; j < ambient_; ++j)
            if (basis_(row, j) != 0) return j;
        return ambient_;
    }

    int ambient_;
    Matrix basis_; // canonical RREF rows, possibly 0 x ambient_
};

} // namespace frobstruct
