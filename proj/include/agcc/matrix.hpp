/*
   Copyright 2026 the agcc authors

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

#ifndef AGCC_MATRIX_HPP
#define AGCC_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "agcc/field.hpp"

namespace agcc {

/// Dense matrix over a Field, row-major.
class MatrixGF {
   public:
    MatrixGF(FieldPtr f, std::size_t rows, std::size_t cols);
    MatrixGF(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
    static MatrixGF identity(const FieldPtr& f, std::size_t n);
    static MatrixGF from_rows(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows);

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Elem at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    Elem& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    std::vector<Elem> row(std::size_t i) const;
    bool is_zero() const;
    bool operator==(const MatrixGF& o) const;
    bool operator!=(const MatrixGF& o) const { return !(*this == o); }

    /// Reduced row echelon form with zero rows dropped; rank = result.rows().
    MatrixGF rref() const;
    std::size_t rank() const;
    /// Rows form a basis of the right null space {v : M v^T = 0}.
    MatrixGF null_space() const;
    MatrixGF transpose() const;
    MatrixGF mul(const MatrixGF& o) const;
    MatrixGF kronecker(const MatrixGF& o) const;
    /// Square matrix inverse; throws validation_error when singular.
    MatrixGF inverse() const;
    MatrixGF vstack(const MatrixGF& o) const;
    /// Copy without column j.
    MatrixGF drop_col(std::size_t j) const;
    /// Row slice [lo, hi).
    MatrixGF row_range(std::size_t lo, std::size_t hi) const;

    /// v * M for a row vector v of length rows().
    std::vector<Elem> apply_left(const std::vector<Elem>& v) const;
    /// M * v^T for a vector v of length cols().
    std::vector<Elem> apply_right(const std::vector<Elem>& v) const;

   private:
    FieldPtr f_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<Elem> a_;
    void check_same_field(const MatrixGF& o) const;
};

/// Number of nonzero coordinates.
std::size_t weight(const std::vector<Elem>& v);

}  // namespace agcc

#endif
