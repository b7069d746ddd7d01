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

#include "lagc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagc {

FqMatrix::FqMatrix(Field f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

FqMatrix FqMatrix::identity(const Field& f, std::size_t n) {
    FqMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FqMatrix FqMatrix::from_rows(const Field& f, const std::vector<std::vector<Fe>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows[0].size();
    FqMatrix m(f, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw std::invalid_argument("ragged rows");
        m.set_row(i, rows[i]);
    }
    return m;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    FqMatrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
    return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    FqMatrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], o.a_[i]);
    return r;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    FqMatrix r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Fe v = (*this)(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) = f_.add(r(i, j), f_.mul(v, o(k, j)));
        }
    }
    return r;
}

FqMatrix FqMatrix::operator*(Fe s) const {
    FqMatrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.mul(a_[i], s);
    return r;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix r(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Fe FqMatrix::trace() const {
    Fe t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = f_.add(t, (*this)(i, i));
    return t;
}

bool FqMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Fe v) { return v == 0; });
}

std::vector<Fe> FqMatrix::row(std::size_t i) const {
    return std::vector<Fe>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void FqMatrix::set_row(std::size_t i, std::span<const Fe> r) {
    std::copy(r.begin(), r.end(), a_.begin() + i * cols_);
}

std::vector<Fe> FqMatrix::mul_vec(std::span<const Fe> v) const {
    if (v.size() != cols_) throw std::invalid_argument("shape mismatch");
    std::vector<Fe> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] = f_.add(r[i], f_.mul((*this)(i, j), v[j]));
    return r;
}

std::vector<std::size_t> FqMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && (*this)(p, c) == 0) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
        const Fe inv = f_.inv((*this)(r, c));
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = f_.mul((*this)(r, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const Fe v = (*this)(i, c);
            if (v == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                (*this)(i, j) = f_.sub((*this)(i, j), f_.mul(v, (*this)(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t FqMatrix::rank() const {
    FqMatrix copy = *this;
    return copy.rref().size();
}

FqMatrix FqMatrix::kernel() const {
    FqMatrix work = *this;
    const auto pivots = work.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FqMatrix ker(f_, free_cols.size(), cols_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        ker(k, fc) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            ker(k, pivots[i]) = f_.neg(work(i, fc));
    }
    // already echelon up to row order; normalize for canonical output
    ker.rref();
    return ker;
}

FqMatrix FqMatrix::row_basis() const {
    FqMatrix work = *this;
    const auto pivots = work.rref();
    FqMatrix out(f_, pivots.size(), cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i) out.set_row(i, work.row(i));
    return out;
}

std::optional<std::vector<Fe>> FqMatrix::solve(std::span<const Fe> b) const {
    if (b.size() != rows_) throw std::invalid_argument("shape mismatch");
    FqMatrix aug(f_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    const auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
    std::vector<Fe> x(cols_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
    return x;
}

FqMatrix FqMatrix::vstack(const FqMatrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("shape mismatch");
    FqMatrix r(f_, rows_ + below.rows_, cols_);
    std::copy(a_.begin(), a_.end(), r.a_.begin());
    std::copy(below.a_.begin(), below.a_.end(), r.a_.begin() + a_.size());
    return r;
}

FqMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f.q() - 1);
    FqMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

FqMatrix random_matrix_of_rank(const Field& f, std::size_t rows, std::size_t cols, std::size_t k,
                               std::mt19937_64& rng) {
    if (k > std::min(rows, cols)) throw std::invalid_argument("rank too large");
    if (k == 0) return FqMatrix(f, rows, cols);
    while (true) {
        FqMatrix left = random_matrix(f, rows, k, rng);
        FqMatrix right = random_matrix(f, k, cols, rng);
        if (left.rank() == k && right.rank() == k) {
            FqMatrix m = left * right;
            if (m.rank() == k) return m;
        }
    }
}

Fe dot(const Field& f, std::span<const Fe> a, std::span<const Fe> b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    Fe s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

}  // namespace lagc
