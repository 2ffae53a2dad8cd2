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

#ifndef AGCC_POLY_MATRIX_HPP
#define AGCC_POLY_MATRIX_HPP

#include <functional>

#include "agcc/matrix.hpp"
#include "agcc/poly.hpp"

namespace agcc {

/// kappa x n matrix over F_q[D], stored as coefficient matrices
/// A_0, ..., A_m with A_m nonzero (m tight) unless the matrix is constant.
class PolyMatrix {
   public:
    explicit PolyMatrix(std::vector<MatrixGF> coeffs);
    static PolyMatrix constant(const MatrixGF& a);

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    /// Memory m: the largest power of D with a nonzero coefficient matrix.
    std::size_t memory() const { return coeff_.size() - 1; }
    const MatrixGF& coeff(std::size_t t) const { return coeff_[t]; }
    const std::vector<MatrixGF>& coeffs() const { return coeff_; }
    Poly entry(std::size_t i, std::size_t j) const;
    bool operator==(const PolyMatrix& o) const;

    /// gamma_i: largest t with a nonzero entry in row i of A_t (0 for a zero row).
    std::size_t row_degree(std::size_t i) const;
    /// External degree gamma = sum of row degrees.
    std::size_t degree() const;
    /// Row i = coefficient of D^gamma_i in row i.
    MatrixGF leading_row_matrix() const;

    /// Full row rank over the rational function field.
    bool full_rank() const;

    /// Basic: some polynomial right inverse exists, i.e. the gcd of all
    /// kappa x kappa minors is a nonzero constant. Uses the minor route up to
    /// the guard, then falls back to the Smith form.
    bool is_basic(const Guards& g = Guards()) const;
    /// Minor-gcd route only; throws guard_exceeded past the combinatorial guard.
    bool is_basic_minors(const Guards& g = Guards()) const;
    /// Smith-form route only.
    bool is_basic_smith() const;

    /// Reduced: the leading-row-coefficient matrix has full rank kappa.
    /// Callers are expected to have certified basicness first.
    bool is_reduced() const;

    /// Maximum degree over all kappa x kappa minors; -1 when all vanish.
    /// Equals the external degree exactly for reduced matrices (the
    /// independent characterization used as an oracle).
    int max_minor_degree(const Guards& g = Guards()) const;

    /// Monic invariant factors d_1 | d_2 | ... of the Smith normal form,
    /// zeros excluded.
    std::vector<Poly> invariant_factors() const;

    /// Determinant of a square polynomial matrix (fraction-free elimination).
    static Poly determinant(std::vector<std::vector<Poly>> m, const FieldPtr& f);

   private:
    FieldPtr f_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<MatrixGF> coeff_;
    void for_each_minor(const Guards& g, const std::function<bool(const Poly&)>& visit) const;
};

}  // namespace agcc

#endif
