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

#include <catch2/catch_amalgamated.hpp>

#include "frobstruct/matrix.hpp"
#include "frobstruct/rng.hpp"
#include "frobstruct/subspace.hpp"

using namespace frobstruct;

namespace {

Rational q(long long num, long long den = 1) { return Rational(num, den); }

// Cofactor expansion along the first row: an independent reference for the
// fraction-free elimination determinant.
Rational laplace_det(const Matrix& m) {
    const int n = m.rows();
    if (n == 1) return m(0, 0);
    Rational total = 0;
    for (int c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        Matrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int cc = 0, k = 0; cc < n; ++cc)
                if (cc != c) minor(r - 1, k++) = m(r, cc);
        const Rational cof = laplace_det(minor);
        total += (c % 2 == 0 ? m(0, c) : -m(0, c)) * cof;
    }
    return total;
}

Matrix random_matrix(SplitMix64& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m(r, c) = Rational(rng.uniform(-9, 9), 1 + rng.uniform(0, 4));
    return m;
}

} // namespace

TEST_CASE("reduced row echelon form is canonical") {
    const Matrix m = Matrix::from_rows({
        {q(2), q(4), q(-2), q(6)},
        {q(1), q(2), q(0), q(5)},
        {q(3), q(6), q(-2), q(11)},
    });
    const Echelon e = rref(m);
    REQUIRE(e.rank == 2);
    REQUIRE(e.pivots == std::vector<int>{0, 2});
    // Pivot columns reduce to unit vectors, remaining rows vanish.
    CHECK(e.reduced(0, 0) == 1);
    CHECK(e.reduced(0, 1) == 2);
    CHECK(e.reduced(0, 2) == 0);
    CHECK(e.reduced(0, 3) == 5);
    CHECK(e.reduced(1, 2) == 1);
    CHECK(e.reduced(1, 3) == 2);
    for (int c = 0; c < 4; ++c) CHECK(e.reduced(2, c) == 0);

    // Row-scaled input has the same canonical form.
    Matrix scaled = m;
    for (int c = 0; c < 4; ++c) {
        scaled(0, c) *= q(-3, 7);
        scaled(2, c) *= q(5, 2);
    }
    CHECK(rref(scaled).reduced == e.reduced);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    SplitMix64 rng(20260816);
    for (int it = 0; it < 25; ++it) {
        const int n = 2 + static_cast<int>(rng.uniform(0, 3));
        const Matrix m = random_matrix(rng, n, n);
        CHECK(det(m) == laplace_det(m));
    }
}

TEST_CASE("determinant of a rank-deficient matrix is zero") {
    const Matrix m = Matrix::from_rows({
        {q(1), q(2), q(3)},
        {q(2), q(4), q(6)},
        {q(0), q(1), q(-1)},
    });
    CHECK(det(m) == 0);
    CHECK(rank(m) == 2);
}

TEST_CASE("determinant rejects non-square input") {
    CHECK_THROWS_AS(det(Matrix(2, 3)), NonSquareError);
}

TEST_CASE("solve returns exact fractional solutions") {
    const Matrix m = Matrix::from_rows({
        {q(2), q(1)},
        {q(1), q(3)},
    });
    const auto x = solve(m, {q(1), q(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == q(1, 5));
    CHECK((*x)[1] == q(3, 5));
}

TEST_CASE("solve reports inconsistent systems and handles free columns") {
    const Matrix inconsistent = Matrix::from_rows({
        {q(1), q(1)},
        {q(2), q(2)},
    });
    CHECK_FALSE(solve(inconsistent, {q(1), q(3)}).has_value());

    const Matrix wide = Matrix::from_rows({{q(1), q(2), q(-1)}});
    const auto x = solve(wide, {q(4)});
    REQUIRE(x.has_value());
    Rational lhs = 0;
    lhs += (*x)[0] + 2 * (*x)[1] - (*x)[2];
    CHECK(lhs == 4);
}

TEST_CASE("kernel vectors are annihilated and satisfy rank-nullity") {
    SplitMix64 rng(7);
    for (int it = 0; it < 20; ++it) {
        const int rows = 1 + static_cast<int>(rng.uniform(0, 4));
        const int cols = 1 + static_cast<int>(rng.uniform(0, 4));
        const Matrix m = random_matrix(rng, rows, cols);
        const Subspace k = Subspace::kernel(m, cols);
        CHECK(rank(m) + k.dim() == cols);
        for (int r = 0; r < k.dim(); ++r) {
            const std::vector<Rational> image = m.apply(k.basis().row(r));
            for (const Rational& v : image) CHECK(v == 0);
        }
    }
}

TEST_CASE("subspace equality is independent of the generating set") {
    const Subspace a = Subspace::span(3, {{q(1), q(1), q(0)}, {q(0), q(0), q(1)}});
    const Subspace b =
        Subspace::span(3, {{q(2), q(2), q(5)}, {q(-1), q(-1), q(3)}, {q(1), q(1), q(8)}});
    CHECK(a == b);
    CHECK(a.contains(b));
    CHECK(b.contains(std::vector<Rational>{q(3), q(3), q(-7)}));
    CHECK_FALSE(b.contains(std::vector<Rational>{q(1), q(0), q(0)}));
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
    const Subspace u = Subspace::span(4, {{q(1), q(0), q(0), q(0)}, {q(0), q(1), q(1), q(0)}});
    const Subspace v = Subspace::span(4, {{q(0), q(1), q(1), q(0)}, {q(0), q(0), q(0), q(1)}});
    const Subspace s = u.sum(v);
    const Subspace i = u.intersect(v);
    CHECK(s.dim() == 3);
    CHECK(i.dim() == 1);
    CHECK(i == Subspace::span(4, {{q(0), q(1), q(1), q(0)}}));
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
}

TEST_CASE("annihilator is an involution") {
    SplitMix64 rng(11);
    for (int it = 0; it < 15; ++it) {
        const int d = 2 + static_cast<int>(rng.uniform(0, 4));
        const int rows = static_cast<int>(rng.uniform(0, d));
        const Subspace u = Subspace::span(d, random_matrix(rng, rows, d));
        CHECK(u.annihilator().dim() == d - u.dim());
        CHECK(u.annihilator().annihilator() == u);
    }
}

TEST_CASE("preimage pulls a target back through a linear map") {
    // Projection (x, y, z) -> (x, y); preimage of a line regains the z axis.
    const Matrix proj = Matrix::from_rows({{q(1), q(0), q(0)}, {q(0), q(1), q(0)}});
    const Subspace line = Subspace::span(2, {{q(1), q(1)}});
    const Subspace pre = Subspace::preimage(proj, line);
    CHECK(pre == Subspace::span(3, {{q(1), q(1), q(0)}, {q(0), q(0), q(1)}}));

    // The preimage of the zero space is exactly the kernel.
    const Subspace zero_target(2);
    CHECK(Subspace::preimage(proj, zero_target) == Subspace::kernel(proj, 3));
}

TEST_CASE("trivial and full subspaces behave at the boundaries") {
    const Subspace zero(4);
    CHECK(zero.dim() == 0);
    CHECK(zero.annihilator() == Subspace::full(4));
    CHECK(Subspace::full(4).intersect(zero) == zero);
    CHECK(Subspace::full(4).sum(zero) == Subspace::full(4));
    CHECK(zero.contains(zero));
}
