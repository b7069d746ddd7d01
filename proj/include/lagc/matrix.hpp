/*
   Copyright 2026 The lagcode authors

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

#ifndef LAGC_MATRIX_HPP
#define LAGC_MATRIX_HPP

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "lagc/field.hpp"

namespace lagc {

/// Dense matrix over GF(q), row-major. Elimination uses a fixed pivot rule
/// (leftmost column, lowest row index) so results are reproducible.
class FqMatrix {
   public:
    FqMatrix(Field f, std::size_t rows, std::size_t cols);
    static FqMatrix identity(const Field& f, std::size_t n);
    static FqMatrix from_rows(const Field& f, const std::vector<std::vector<Fe>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return f_; }

    Fe operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Fe& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    FqMatrix operator+(const FqMatrix& o) const;
    FqMatrix operator-(const FqMatrix& o) const;
    FqMatrix operator*(const FqMatrix& o) const;
    FqMatrix operator*(Fe s) const;
    bool operator==(const FqMatrix& o) const;
    bool operator!=(const FqMatrix& o) const { return !(*this == o); }

    FqMatrix transpose() const;
    Fe trace() const;
    bool is_zero() const;

    std::vector<Fe> row(std::size_t i) const;
    void set_row(std::size_t i, std::span<const Fe> r);
    std::vector<Fe> mul_vec(std::span<const Fe> v) const;  // this * v (column vector)

    /// Reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    /// Basis of the right nullspace {x : A x = 0}, returned as the rows of a matrix
    /// in reduced echelon form (0 x cols when the kernel is trivial).
    FqMatrix kernel() const;

    /// Row space basis: rref with zero rows dropped.
    FqMatrix row_basis() const;

    /// One solution x of A x = b, or nullopt if inconsistent. Free variables are 0.
    std::optional<std::vector<Fe>> solve(std::span<const Fe> b) const;

    FqMatrix vstack(const FqMatrix& below) const;

   private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<Fe> a_;
};

FqMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

/// Uniformly random rank-k matrix, built as a product of full-rank factors.
FqMatrix random_matrix_of_rank(const Field& f, std::size_t rows, std::size_t cols, std::size_t k,
                               std::mt19937_64& rng);

Fe dot(const Field& f, std::span<const Fe> a, std::span<const Fe> b);

}  // namespace lagc

#endif
