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

#include <optional>
#include <utility>
#include <vector>

#include "frobstruct/errors.hpp"
#include "frobstruct/rational.hpp"

namespace frobstruct {

/// Dense matrix over the rationals. All operations are exact.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw InvalidArgumentError("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
        Matrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw DimensionMismatchError("ragged row list");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    std::vector<Rational> row(int r) const {
        std::vector<Rational> out(cols_);
        for (int j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) throw DimensionMismatchError("matrix product shape mismatch");
        Matrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < other.cols_; ++j) {
                    const Rational& b = other(k, j);
                    if (b != 0) out(i, j) += a * b;
                }
            }
        return out;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw DimensionMismatchError("matrix-vector shape mismatch");
        std::vector<Rational> out(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

  private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

struct Echelon {
    Matrix reduced;          // reduced row-echelon form
    std::vector<int> pivots; // pivot column of each pivot row
    int rank = 0;
};

/// Gauss-Jordan over the rationals: pivots normalized to 1, eliminated above
/// and below. Row order of the result is pivot-sorted, so equal row spaces
/// give byte-identical reduced matrices.
inline Echelon rref(Matrix m) {
    Echelon out;
    const int rows = m.rows(), cols = m.cols();
    int lead = 0;
    for (int c = 0; c < cols && lead < rows; ++c) {
        int piv = -1;
        for (int r = lead; r < rows; ++r)
            if (m(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(lead, j));
        const Rational inv = Rational(1) / m(lead, c);
        for (int j = c; j < cols; ++j)
            if (m(lead, j) != 0) m(lead, j) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == lead || m(r, c) == 0) continue;
            const Rational factor = m(r, c);
            for (int j = c; j < cols; ++j)
                if (m(lead, j) != 0) m(r, j) -= factor * m(lead, j);
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.rank = lead;
    out.reduced = std::move(m);
    return out;
}

inline int rank(const Matrix& m) { return rref(m).rank; }

/// Determinant by fraction-free (Bareiss) elimination. Denominators are
/// cleared row by row first so all intermediate work is on integers.
inline Rational det(const Matrix& m) {
    if (m.rows() != m.cols()) throw NonSquareError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;

    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (int i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (int j = 0; j < n; ++j) {
            const Integer d = denominator(m(i, j));
            lcm = lcm / gcd(lcm, d) * d;
        }
        scale *= lcm;
        for (int j = 0; j < n; ++j)
            a[i][j] = numerator(m(i, j)) * (lcm / denominator(m(i, j)));
    }

    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return Rational(sign * a[n - 1][n - 1], scale);
}

/// One solution of M x = b, if any.
inline std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw DimensionMismatchError("solve shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const Echelon e = rref(std::move(aug));
    for (int p = 0; p < e.rank; ++p)
        if (e.pivots[p] == m.cols()) return std::nullopt; // pivot in the constant column
    std::vector<Rational> x(m.cols());
    for (int p = 0; p < e.rank; ++p) x[e.pivots[p]] = e.reduced(p, m.cols());
    return x;
}

} // namespace frobstruct
