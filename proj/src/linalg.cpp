/*
   Copyright 2026 The supertab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "supertab/linalg.hpp"

#include <utility>

#include "supertab/error.hpp"

namespace supertab {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ShapeMismatch("matrix data does not match its shape");
}

bool Matrix::is_zero() const noexcept {
    for (auto e : data_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem{1};
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Echelon rref(const Field& f, Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        }
        const Elem inv = f.inv(m(r, c));
        for (std::size_t j = c; j < cols; ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Elem factor = m(i, c);
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).pivots.size(); }

std::vector<Vec> nullspace_basis(const Field& f, const Matrix& m) {
    const Echelon e = rref(f, m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols);
        v[free] = Elem{1};
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Field& f, const Matrix& m, std::span<const Elem> c) {
    if (c.size() != m.rows()) throw ShapeMismatch("right-hand side length differs from row count");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = c[i];
    }
    const Echelon e = rref(f, std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
    return x;
}

bool perp_to_nullspace(const Field& f, const Matrix& m, std::span<const Elem> b) {
    if (b.size() != m.cols()) throw ShapeMismatch("vector length differs from column count");
    for (const auto& v : nullspace_basis(f, m)) {
        if (!dot(f, v, b).is_zero()) return false;
    }
    return true;
}

Vec mat_vec(const Field& f, const Matrix& m, std::span<const Elem> x) {
    if (x.size() != m.cols()) throw ShapeMismatch("vector length differs from column count");
    Vec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(f, m.row(i), x);
    return out;
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw ShapeMismatch("dot product of vectors with different lengths");
    Elem acc{0};
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

}  // namespace supertab
