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

#include "agcc/matrix.hpp"

#include <algorithm>

namespace agcc {

MatrixGF::MatrixGF(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), r_(rows), c_(cols), a_(rows * cols, 0) {
    if (!f_) throw validation_error("matrix: null field");
}

MatrixGF::MatrixGF(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : f_(std::move(f)), r_(rows), c_(cols), a_(std::move(entries)) {
    if (!f_) throw validation_error("matrix: null field");
    if (a_.size() != r_ * c_) throw validation_error("matrix: entry count mismatch");
    for (Elem e : a_) f_->check(e);
}

MatrixGF MatrixGF::identity(const FieldPtr& f, std::size_t n) {
    MatrixGF m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixGF MatrixGF::from_rows(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows) {
    if (rows.empty()) throw validation_error("matrix: no rows");
    std::size_t c = rows[0].size();
    std::vector<Elem> a;
    a.reserve(rows.size() * c);
    for (const auto& r : rows) {
        if (r.size() != c) throw validation_error("matrix: ragged rows");
        a.insert(a.end(), r.begin(), r.end());
    }
    return MatrixGF(f, rows.size(), c, std::move(a));
}

std::vector<Elem> MatrixGF::row(std::size_t i) const {
    return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_};
}

bool MatrixGF::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e == 0; });
}

bool MatrixGF::operator==(const MatrixGF& o) const {
    return r_ == o.r_ && c_ == o.c_ && f_->same(o.f_) && a_ == o.a_;
}

void MatrixGF::check_same_field(const MatrixGF& o) const {
    if (!f_->same(o.f_)) throw validation_error("matrix: mixed fields");
}

MatrixGF MatrixGF::rref() const {
    MatrixGF m = *this;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
        std::size_t piv = row;
        while (piv < r_ && m.at(piv, col) == 0) ++piv;
        if (piv == r_) continue;
        if (piv != row)
            for (std::size_t j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(row, j));
        Elem pi = f_->inv(m.at(row, col));
        for (std::size_t j = 0; j < c_; ++j) m.at(row, j) = f_->mul(m.at(row, j), pi);
        for (std::size_t r = 0; r < r_; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Elem c = m.at(r, col);
            for (std::size_t j = 0; j < c_; ++j)
                m.at(r, j) = f_->sub(m.at(r, j), f_->mul(c, m.at(row, j)));
        }
        ++row;
    }
    return m.row_range(0, row);
}

std::size_t MatrixGF::rank() const { return rref().rows(); }

MatrixGF MatrixGF::null_space() const {
    MatrixGF r = rref();
    std::size_t rk = r.rows();
    // pivot column per reduced row
    std::vector<std::size_t> pivots(rk);
    std::vector<bool> is_pivot(c_, false);
    for (std::size_t i = 0; i < rk; ++i) {
        std::size_t j = 0;
        while (j < c_ && r.at(i, j) == 0) ++j;
        pivots[i] = j;
        is_pivot[j] = true;
    }
    MatrixGF basis(f_, c_ - rk, c_);
    std::size_t b = 0;
    for (std::size_t j = 0; j < c_; ++j) {
        if (is_pivot[j]) continue;
        basis.at(b, j) = 1;
        for (std::size_t i = 0; i < rk; ++i) basis.at(b, pivots[i]) = f_->neg(r.at(i, j));
        ++b;
    }
    return basis;
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

MatrixGF MatrixGF::mul(const MatrixGF& o) const {
    check_same_field(o);
    if (c_ != o.r_) throw validation_error("matrix: shape mismatch in multiply");
    MatrixGF m(f_, r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            Elem v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j)
                m.at(i, j) = f_->add(m.at(i, j), f_->mul(v, o.at(k, j)));
        }
    return m;
}

MatrixGF MatrixGF::kronecker(const MatrixGF& o) const {
    check_same_field(o);
    MatrixGF m(f_, r_ * o.r_, c_ * o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) {
            Elem v = at(i, j);
            if (v == 0) continue;
            for (std::size_t p = 0; p < o.r_; ++p)
                for (std::size_t q = 0; q < o.c_; ++q)
                    m.at(i * o.r_ + p, j * o.c_ + q) = f_->mul(v, o.at(p, q));
        }
    return m;
}

MatrixGF MatrixGF::inverse() const {
    if (r_ != c_) throw validation_error("matrix: inverse of non-square matrix");
    MatrixGF a = *this;
    MatrixGF inv = identity(f_, r_);
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_; ++col) {
        std::size_t piv = row;
        while (piv < r_ && a.at(piv, col) == 0) ++piv;
        if (piv == r_) throw validation_error("matrix: singular");
        if (piv != row)
            for (std::size_t j = 0; j < c_; ++j) {
                std::swap(a.at(piv, j), a.at(row, j));
                std::swap(inv.at(piv, j), inv.at(row, j));
            }
        Elem pi = f_->inv(a.at(row, col));
        for (std::size_t j = 0; j < c_; ++j) {
            a.at(row, j) = f_->mul(a.at(row, j), pi);
            inv.at(row, j) = f_->mul(inv.at(row, j), pi);
        }
        for (std::size_t r = 0; r < r_; ++r) {
            if (r == row || a.at(r, col) == 0) continue;
            Elem c = a.at(r, col);
            for (std::size_t j = 0; j < c_; ++j) {
                a.at(r, j) = f_->sub(a.at(r, j), f_->mul(c, a.at(row, j)));
                inv.at(r, j) = f_->sub(inv.at(r, j), f_->mul(c, inv.at(row, j)));
            }
        }
        ++row;
    }
    return inv;
}

MatrixGF MatrixGF::vstack(const MatrixGF& o) const {
    check_same_field(o);
    if (c_ != o.c_) throw validation_error("matrix: column mismatch in vstack");
    std::vector<Elem> a = a_;
    a.insert(a.end(), o.a_.begin(), o.a_.end());
    return MatrixGF(f_, r_ + o.r_, c_, std::move(a));
}

MatrixGF MatrixGF::drop_col(std::size_t j) const {
    if (j >= c_) throw validation_error("matrix: column index out of range");
    MatrixGF m(f_, r_, c_ - 1);
    for (std::size_t i = 0; i < r_; ++i) {
        std::size_t t = 0;
        for (std::size_t k = 0; k < c_; ++k) {
            if (k == j) continue;
            m.at(i, t++) = at(i, k);
        }
    }
    return m;
}

MatrixGF MatrixGF::row_range(std::size_t lo, std::size_t hi) const {
    if (lo > hi || hi > r_) throw validation_error("matrix: bad row range");
    return MatrixGF(f_, hi - lo, c_,
                    std::vector<Elem>(a_.begin() + lo * c_, a_.begin() + hi * c_));
}

std::vector<Elem> MatrixGF::apply_left(const std::vector<Elem>& v) const {
    if (v.size() != r_) throw validation_error("matrix: vector length mismatch");
    std::vector<Elem> out(c_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < c_; ++j)
            out[j] = f_->add(out[j], f_->mul(v[i], at(i, j)));
    }
    return out;
}

std::vector<Elem> MatrixGF::apply_right(const std::vector<Elem>& v) const {
    if (v.size() != c_) throw validation_error("matrix: vector length mismatch");
    std::vector<Elem> out(r_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j < c_; ++j) acc = f_->add(acc, f_->mul(at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

std::size_t weight(const std::vector<Elem>& v) {
    std::size_t w = 0;
    for (Elem e : v)
        if (e != 0) ++w;
    return w;
}

}  // namespace agcc
