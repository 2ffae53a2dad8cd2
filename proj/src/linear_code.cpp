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

#include "agcc/linear_code.hpp"

#include <algorithm>

namespace agcc {

LinearCode::LinearCode(FieldPtr f, std::size_t n, MatrixGF gen, MatrixGF par)
    : f_(std::move(f)), n_(n), k_(gen.rows()), gen_(std::move(gen)), par_(std::move(par)) {
    dist_ = {1, n_};
    if (k_ == n_) dist_ = {1, 1};
}

LinearCode LinearCode::from_generator(const MatrixGF& m) {
    if (m.cols() < 1) throw validation_error("code: length must be >= 1");
    if (m.is_zero()) throw validation_error("code: zero generator (zero-dimensional code)");
    MatrixGF gen = m.rref();
    MatrixGF par = gen.null_space().rref();
    return LinearCode(m.field(), m.cols(), std::move(gen), std::move(par));
}

LinearCode LinearCode::zero(const FieldPtr& f, std::size_t n) {
    if (n < 1) throw validation_error("code: length must be >= 1");
    return LinearCode(f, n, MatrixGF(f, 0, n), MatrixGF::identity(f, n));
}

LinearCode LinearCode::dual() const {
    if (is_zero_code()) {
        MatrixGF full = MatrixGF::identity(f_, n_);
        return LinearCode(f_, n_, full, MatrixGF(f_, 0, n_));
    }
    if (is_full_code()) return zero(f_, n_);
    LinearCode d(f_, n_, par_, gen_);
    return d;
}

std::size_t LinearCode::min_distance(const Guards& g) const {
    if (k_ == 0) throw validation_error("code: minimum distance of the zero code is undefined");
    if (dist_.exact()) return dist_.lo;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k_; ++i) {
        total *= f_->order();
        if (total > g.max_codewords)
            throw guard_exceeded("code: q^k exceeds the codeword enumeration guard");
    }
    // DFS over message digits, adding one scaled generator row per level
    std::size_t best = n_ + 1;
    std::vector<std::vector<Elem>> stack(k_ + 1, std::vector<Elem>(n_, 0));
    // scaled rows cache: row i scaled by every field element
    const std::uint64_t q = f_->order();
    std::vector<std::vector<std::vector<Elem>>> scaled(k_);
    for (std::size_t i = 0; i < k_; ++i) {
        scaled[i].resize(q);
        auto r = gen_.row(i);
        for (Elem c = 0; c < q; ++c) {
            std::vector<Elem> s(n_);
            for (std::size_t j = 0; j < n_; ++j) s[j] = f_->mul(c, r[j]);
            scaled[i][c] = std::move(s);
        }
    }
    auto rec = [&](auto&& self, std::size_t depth, bool nonzero) -> void {
        if (depth == k_) {
            if (nonzero) best = std::min(best, weight(stack[k_]));
            return;
        }
        for (Elem c = 0; c < q; ++c) {
            const auto& add = scaled[depth][c];
            for (std::size_t j = 0; j < n_; ++j)
                stack[depth + 1][j] = f_->add(stack[depth][j], add[j]);
            self(self, depth + 1, nonzero || c != 0);
        }
    };
    rec(rec, 0, false);
    dist_ = {best, best};
    return best;
}

void LinearCode::claim_distance(std::size_t lo, std::size_t hi) {
    dist_.lo = std::max(dist_.lo, lo);
    dist_.hi = std::min(dist_.hi, hi);
    if (dist_.lo > dist_.hi) throw std::logic_error("code: contradictory distance claims");
}

bool LinearCode::is_self_orthogonal() const {
    if (is_zero_code()) return true;
    return gen_.mul(gen_.transpose()).is_zero();
}

bool LinearCode::is_self_dual() const {
    return is_self_orthogonal() && n_ % 2 == 0 && k_ == n_ / 2;
}

bool LinearCode::is_cyclic() const {
    if (is_zero_code() || is_full_code()) return true;
    for (std::size_t i = 0; i < k_; ++i) {
        auto r = gen_.row(i);
        std::rotate(r.rbegin(), r.rbegin() + 1, r.rend());  // right cyclic shift
        if (!contains(r)) return false;
    }
    return true;
}

std::vector<Elem> LinearCode::encode(const std::vector<Elem>& msg) const {
    return gen_.apply_left(msg);
}

bool LinearCode::contains(const std::vector<Elem>& v) const {
    return weight(par_.apply_right(v)) == 0;
}

bool LinearCode::same_code(const LinearCode& o) const {
    return n_ == o.n_ && k_ == o.k_ && f_->same(o.f_) && gen_ == o.gen_;
}

}  // namespace agcc
