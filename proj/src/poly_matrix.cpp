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

#include "agcc/poly_matrix.hpp"

#include <algorithm>

namespace agcc {

PolyMatrix::PolyMatrix(std::vector<MatrixGF> coeffs) {
    if (coeffs.empty()) throw validation_error("polymatrix: no coefficient matrices");
    f_ = coeffs[0].field();
    r_ = coeffs[0].rows();
    c_ = coeffs[0].cols();
    if (r_ == 0 || c_ == 0) throw validation_error("polymatrix: empty shape");
    for (const auto& m : coeffs) {
        if (m.rows() != r_ || m.cols() != c_)
            throw validation_error("polymatrix: coefficient shape mismatch");
        if (!m.field()->same(f_)) throw validation_error("polymatrix: mixed fields");
    }
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    coeff_ = std::move(coeffs);
}

PolyMatrix PolyMatrix::constant(const MatrixGF& a) { return PolyMatrix({a}); }

Poly PolyMatrix::entry(std::size_t i, std::size_t j) const {
    std::vector<Elem> c(coeff_.size());
    for (std::size_t t = 0; t < coeff_.size(); ++t) c[t] = coeff_[t].at(i, j);
    return Poly(f_, std::move(c));
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && coeff_ == o.coeff_;
}

std::size_t PolyMatrix::row_degree(std::size_t i) const {
    for (std::size_t t = coeff_.size(); t-- > 0;)
        for (std::size_t j = 0; j < c_; ++j)
            if (coeff_[t].at(i, j) != 0) return t;
    return 0;
}

std::size_t PolyMatrix::degree() const {
    std::size_t g = 0;
    for (std::size_t i = 0; i < r_; ++i) g += row_degree(i);
    return g;
}

MatrixGF PolyMatrix::leading_row_matrix() const {
    MatrixGF lead(f_, r_, c_);
    for (std::size_t i = 0; i < r_; ++i) {
        std::size_t gi = row_degree(i);
        for (std::size_t j = 0; j < c_; ++j) lead.at(i, j) = coeff_[gi].at(i, j);
    }
    return lead;
}

bool PolyMatrix::full_rank() const { return invariant_factors().size() == r_; }

Poly PolyMatrix::determinant(std::vector<std::vector<Poly>> m, const FieldPtr& f) {
    const std::size_t n = m.size();
    if (n == 0) return Poly::one(f);
    bool negate = false;
    Poly prev = Poly::one(f);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly::zero(f);
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = Poly::div_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return negate ? Poly::zero(f) - det : det;
}

void PolyMatrix::for_each_minor(const Guards& g,
                                const std::function<bool(const Poly&)>& visit) const {
    if (r_ > c_) throw validation_error("polymatrix: more rows than columns");
    // combinatorial guard on C(cols, rows)
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < r_; ++i) {
        count = count * (c_ - i) / (i + 1);
        if (count > g.max_minor_count)
            throw guard_exceeded("polymatrix: too many minors, use the Smith route");
    }
    std::vector<std::size_t> sel(r_);
    for (std::size_t i = 0; i < r_; ++i) sel[i] = i;
    while (true) {
        std::vector<std::vector<Poly>> sub(r_, std::vector<Poly>(r_, Poly::zero(f_)));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j) sub[i][j] = entry(i, sel[j]);
        if (!visit(determinant(std::move(sub), f_))) return;
        // next combination
        std::size_t i = r_;
        while (i-- > 0) {
            if (sel[i] + (r_ - i) < c_) {
                ++sel[i];
                for (std::size_t j = i + 1; j < r_; ++j) sel[j] = sel[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

bool PolyMatrix::is_basic_minors(const Guards& g) const {
    Poly acc = Poly::zero(f_);
    bool early = false;
    for_each_minor(g, [&](const Poly& minor) {
        acc = Poly::gcd(acc, minor);
        if (!acc.is_zero() && acc.degree() == 0) {
            early = true;
            return false;
        }
        return true;
    });
    if (early) return true;
    if (acc.is_zero()) throw validation_error("polymatrix: rank deficient");
    return acc.degree() == 0;
}

bool PolyMatrix::is_basic_smith() const {
    auto inv = invariant_factors();
    if (inv.size() < r_) throw validation_error("polymatrix: rank deficient");
    return std::all_of(inv.begin(), inv.end(), [](const Poly& p) { return p.degree() == 0; });
}

bool PolyMatrix::is_basic(const Guards& g) const {
    try {
        return is_basic_minors(g);
    } catch (const guard_exceeded&) {
        return is_basic_smith();
    }
}

bool PolyMatrix::is_reduced() const { return leading_row_matrix().rank() == r_; }

int PolyMatrix::max_minor_degree(const Guards& g) const {
    int best = -1;
    for_each_minor(g, [&](const Poly& minor) {
        best = std::max(best, minor.degree());
        return true;
    });
    return best;
}

std::vector<Poly> PolyMatrix::invariant_factors() const {
    std::vector<std::vector<Poly>> m(r_, std::vector<Poly>(c_, Poly::zero(f_)));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m[i][j] = entry(i, j);

    const std::size_t lim = std::min(r_, c_);
    std::vector<Poly> inv;
    for (std::size_t t = 0; t < lim; ++t) {
        while (true) {
            // minimal-degree nonzero entry in the trailing submatrix
            int best_deg = -1;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t; i < r_; ++i)
                for (std::size_t j = t; j < c_; ++j)
                    if (!m[i][j].is_zero() &&
                        (best_deg < 0 || m[i][j].degree() < best_deg)) {
                        best_deg = m[i][j].degree();
                        bi = i;
                        bj = j;
                    }
            if (best_deg < 0) return inv;  // the rest is zero
            std::swap(m[t], m[bi]);
            if (bj != t)
                for (std::size_t i = 0; i < r_; ++i) std::swap(m[i][t], m[i][bj]);

            bool clean = true;
            for (std::size_t i = t + 1; i < r_; ++i) {
                if (m[i][t].is_zero()) continue;
                auto [q, rem] = Poly::divmod(m[i][t], m[t][t]);
                for (std::size_t j = t; j < c_; ++j) m[i][j] = m[i][j] - q * m[t][j];
                if (!rem.is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < c_; ++j) {
                if (m[t][j].is_zero()) continue;
                auto [q, rem] = Poly::divmod(m[t][j], m[t][t]);
                for (std::size_t i = t; i < r_; ++i) m[i][j] = m[i][j] - q * m[i][t];
                if (!rem.is_zero()) clean = false;
            }
            if (!clean) continue;  // degrees dropped; pick a new pivot

            // pivot must divide every remaining entry
            bool patched = false;
            for (std::size_t i = t + 1; i < r_ && !patched; ++i)
                for (std::size_t j = t + 1; j < c_ && !patched; ++j)
                    if (!Poly::mod(m[i][j], m[t][t]).is_zero()) {
                        for (std::size_t jj = t; jj < c_; ++jj) m[t][jj] = m[t][jj] + m[i][jj];
                        patched = true;
                    }
            if (!patched) break;
        }
        inv.push_back(m[t][t].monic());
    }
    return inv;
}

}  // namespace agcc
