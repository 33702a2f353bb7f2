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

#ifndef SUPERTAB_LINALG_HPP
#define SUPERTAB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "supertab/gf.hpp"

namespace supertab {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a field supplied by the caller.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    std::span<Elem> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Elem>& data() const noexcept { return data_; }
    bool is_zero() const noexcept;

    static Matrix identity(std::size_t n);
    /// Rows given as vectors of equal length.
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

/// Reduced row echelon form; pivots[i] is the pivot column of row i.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Columns are processed left to right and the
/// pivot is the first row at or below the current one with a nonzero entry.
Echelon rref(const Field& f, Matrix m);
std::size_t rank(const Field& f, const Matrix& m);
/// One basis vector per free column in increasing column order, with that
/// free variable set to 1 and the other free variables set to 0.
std::vector<Vec> nullspace_basis(const Field& f, const Matrix& m);
/// Particular solution of m x = c with all free variables 0.
std::optional<Vec> solve(const Field& f, const Matrix& m, std::span<const Elem> c);
/// True iff b . v = 0 for every v in the nullspace of m.
bool perp_to_nullspace(const Field& f, const Matrix& m, std::span<const Elem> b);

Vec mat_vec(const Field& f, const Matrix& m, std::span<const Elem> x);
Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace supertab

#endif
