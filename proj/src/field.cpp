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

#include "agcc/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "agcc/poly.hpp"

namespace agcc {

Guards Guards::from_env() {
    Guards g;
    auto rd = [](const char* name, std::uint64_t& target) {
        if (const char* v = std::getenv(name)) {
            char* end = nullptr;
            std::uint64_t x = std::strtoull(v, &end, 10);
            if (end && *end == '\0' && x > 0) target = x;
        }
    };
    rd("AGCC_MAX_CODEWORDS", g.max_codewords);
    rd("AGCC_MAX_STATES", g.max_states);
    rd("AGCC_MAX_COSETS", g.max_cosets);
    rd("AGCC_MAX_TRUNC", g.max_trunc_space);
    rd("AGCC_MAX_MINORS", g.max_minor_count);
    return g;
}

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Irreducibility over the coefficient field: no roots, and for degree >= 4
// trivial gcd with x^(b^i) - x for i up to degree/2.
bool irreducible(const Poly& f) {
    const FieldPtr& k = f.field();
    const int deg = f.degree();
    if (deg < 1) return false;
    for (Elem a = 0; a < k->order(); ++a)
        if (f.eval(a) == 0) return false;
    if (deg >= 4) {
        const std::uint64_t b = k->order();
        std::uint64_t be = 1;
        for (int i = 1; i <= deg / 2; ++i) {
            be *= b;
            Poly t = Poly::x(k).powmod(be, f) - Poly::x(k);
            if (Poly::gcd(t, f).degree() > 0) return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw validation_error("field: characteristic must be prime");
    Guards g;
    if (p > g.max_field_order) throw guard_exceeded("field: order above 2^16");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->deg_ = 1;
    f->order_ = p;
    f->base_order_ = p;
    f->modulus_ = {0, 1};
    f->build_tables();
    return f;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e,
                     const std::optional<std::vector<Elem>>& modulus) {
    if (e < 1) throw validation_error("field: extension degree must be >= 1");
    FieldPtr pf = prime(p);
    if (e == 1) {
        if (modulus && *modulus != std::vector<Elem>{0, 1})
            throw validation_error("field: modulus of a prime field must be x");
        return pf;
    }
    return extension(pf, e, modulus);
}

FieldPtr Field::extension(const FieldPtr& base, std::uint32_t degree,
                          const std::optional<std::vector<Elem>>& modulus) {
    if (!base) throw validation_error("field: null base field");
    if (degree < 2) throw validation_error("field: extension degree must be >= 2");
    Guards g;
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < degree; ++i) {
        order *= base->order();
        if (order > g.max_field_order) throw guard_exceeded("field: order above 2^16");
    }

    std::vector<Elem> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != degree + 1 || mod.back() != 1)
            throw validation_error("field: modulus must be monic of degree e");
        for (Elem c : mod) base->check(c);
        if (!irreducible(Poly(base, mod))) throw validation_error("field: reducible modulus");
    } else {
        // deterministic shipped choice: smallest monic irreducible of the
        // right degree, in low-to-high digit order
        const std::uint64_t b = base->order();
        std::uint64_t tails = 1;
        for (std::uint32_t i = 0; i < degree; ++i) tails *= b;
        bool found = false;
        for (std::uint64_t t = 0; t < tails && !found; ++t) {
            std::vector<Elem> cand(degree + 1, 0);
            std::uint64_t x = t;
            for (std::uint32_t i = 0; i < degree; ++i) {
                cand[i] = static_cast<Elem>(x % b);
                x /= b;
            }
            cand[degree] = 1;
            if (irreducible(Poly(base, cand))) {
                mod = std::move(cand);
                found = true;
            }
        }
        if (!found) throw std::logic_error("field: no irreducible modulus found");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->base_ = base;
    f->p_ = base->characteristic();
    f->deg_ = degree;
    f->order_ = order;
    f->base_order_ = base->order();
    f->modulus_ = std::move(mod);
    f->build_tables();
    return f;
}

std::uint32_t Field::degree_over_prime() const {
    return deg_ * (base_ ? base_->degree_over_prime() : 1);
}

std::vector<Elem> Field::digits(Elem a) const {
    check(a);
    std::vector<Elem> d(deg_, 0);
    std::uint64_t x = a;
    for (std::uint32_t i = 0; i < deg_; ++i) {
        d[i] = static_cast<Elem>(x % base_order_);
        x /= base_order_;
    }
    return d;
}

Elem Field::from_digits(const std::vector<Elem>& d) const {
    if (d.size() != deg_) throw validation_error("field: digit count mismatch");
    std::uint64_t acc = 0;
    for (std::uint32_t i = deg_; i-- > 0;) {
        if (d[i] >= base_order_) throw validation_error("field: digit out of range");
        acc = acc * base_order_ + d[i];
    }
    return static_cast<Elem>(acc);
}

Elem Field::from_base(Elem a) const {
    if (!base_) return a < order_ ? a : throw validation_error("field: element out of range");
    base_->check(a);
    return a;
}

bool Field::is_base_element(Elem a) const {
    check(a);
    return a < base_order_;
}

Elem Field::raw_mul(Elem a, Elem b) const {
    if (!base_) return static_cast<Elem>((std::uint64_t(a) * b) % p_);
    std::vector<Elem> da = digits(a), db = digits(b);
    std::vector<Elem> t(2 * deg_ - 1, 0);
    for (std::uint32_t i = 0; i < deg_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < deg_; ++j)
            t[i + j] = base_->add(t[i + j], base_->mul(da[i], db[j]));
    }
    // reduce modulo the monic modulus
    for (std::uint32_t i = static_cast<std::uint32_t>(t.size()); i-- > deg_;) {
        Elem c = t[i];
        if (c == 0) continue;
        t[i] = 0;
        for (std::uint32_t j = 0; j < deg_; ++j)
            t[i - deg_ + j] = base_->sub(t[i - deg_ + j], base_->mul(c, modulus_[j]));
    }
    t.resize(deg_);
    return from_digits(t);
}

void Field::build_tables() {
    const std::uint64_t n = order_ - 1;
    exp_.assign(n, 0);
    log_.assign(order_, 0);
    if (order_ == 2) {
        gen_ = 1;
        exp_[0] = 1;
        log_[1] = 0;
        return;
    }
    for (Elem cand = 2; cand < order_; ++cand) {
        Elem x = cand;
        std::uint64_t cnt = 1;
        while (x != 1 && cnt <= n) {
            x = raw_mul(x, cand);
            ++cnt;
        }
        if (x == 1 && cnt == n) {
            gen_ = cand;
            break;
        }
    }
    if (gen_ == 0) throw std::logic_error("field: no primitive element found");
    Elem x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        exp_[i] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = raw_mul(x, gen_);
    }
}

void Field::check(Elem a) const {
    if (a >= order_) throw validation_error("field: element out of range");
}

Elem Field::add(Elem a, Elem b) const {
    check(a);
    check(b);
    if (!base_) return static_cast<Elem>((std::uint64_t(a) + b) % p_);
    std::uint64_t acc = 0, mul = 1;
    std::uint64_t xa = a, xb = b;
    for (std::uint32_t i = 0; i < deg_; ++i) {
        acc += std::uint64_t(base_->add(static_cast<Elem>(xa % base_order_),
                                        static_cast<Elem>(xb % base_order_))) *
               mul;
        xa /= base_order_;
        xb /= base_order_;
        mul *= base_order_;
    }
    return static_cast<Elem>(acc);
}

Elem Field::neg(Elem a) const {
    check(a);
    if (!base_) return a == 0 ? 0 : p_ - a;
    std::uint64_t acc = 0, mul = 1;
    std::uint64_t xa = a;
    for (std::uint32_t i = 0; i < deg_; ++i) {
        acc += std::uint64_t(base_->neg(static_cast<Elem>(xa % base_order_))) * mul;
        xa /= base_order_;
        mul *= base_order_;
    }
    return static_cast<Elem>(acc);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint64_t(log_[a]) + log_[b]) % (order_ - 1)];
}

Elem Field::inv(Elem a) const {
    check(a);
    if (a == 0) throw validation_error("field: division by zero");
    return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const {
    check(a);
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[(std::uint64_t(log_[a]) % (order_ - 1)) * (e % (order_ - 1)) % (order_ - 1)];
}

std::uint64_t Field::log(Elem a) const {
    check(a);
    if (a == 0) throw validation_error("field: log of zero");
    return log_[a];
}

bool Field::same(const Field& o) const {
    if (p_ != o.p_ || deg_ != o.deg_ || modulus_ != o.modulus_) return false;
    if (!base_ && !o.base_) return true;
    if (!base_ || !o.base_) return false;
    return base_->same(*o.base_);
}

// ---------------------------------------------------------------------------

namespace {

// Inverts an m x m row-major matrix over `f`; empty result when singular.
std::vector<Elem> invert_small(const FieldPtr& f, std::vector<Elem> a, std::uint32_t m) {
    std::vector<Elem> inv(m * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) inv[i * m + i] = 1;
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < m; ++col) {
        std::uint32_t piv = row;
        while (piv < m && a[piv * m + col] == 0) ++piv;
        if (piv == m) return {};
        if (piv != row)
            for (std::uint32_t j = 0; j < m; ++j) {
                std::swap(a[piv * m + j], a[row * m + j]);
                std::swap(inv[piv * m + j], inv[row * m + j]);
            }
        Elem pi = f->inv(a[row * m + col]);
        for (std::uint32_t j = 0; j < m; ++j) {
            a[row * m + j] = f->mul(a[row * m + j], pi);
            inv[row * m + j] = f->mul(inv[row * m + j], pi);
        }
        for (std::uint32_t r = 0; r < m; ++r) {
            if (r == row || a[r * m + col] == 0) continue;
            Elem c = a[r * m + col];
            for (std::uint32_t j = 0; j < m; ++j) {
                a[r * m + j] = f->sub(a[r * m + j], f->mul(c, a[row * m + j]));
                inv[r * m + j] = f->sub(inv[r * m + j], f->mul(c, inv[row * m + j]));
            }
        }
        ++row;
    }
    return inv;
}

}  // namespace

SubfieldEmbedding SubfieldEmbedding::create(const FieldPtr& small, std::uint32_t m,
                                            const std::optional<std::vector<Elem>>& basis) {
    if (m < 2) throw validation_error("embedding: degree must be >= 2");
    return over(Field::extension(small, m), basis);
}

SubfieldEmbedding SubfieldEmbedding::over(const FieldPtr& big,
                                          const std::optional<std::vector<Elem>>& basis) {
    if (!big || !big->base()) throw validation_error("embedding: field is not an extension");
    SubfieldEmbedding e;
    e.big_ = big;
    e.small_ = big->base();
    e.m_ = big->ext_degree();
    if (basis) {
        if (basis->size() != e.m_) throw validation_error("embedding: basis size mismatch");
        e.basis_ = *basis;
    } else {
        // polynomial basis 1, beta, ..., beta^(m-1)
        for (std::uint32_t i = 0; i < e.m_; ++i) {
            std::vector<Elem> d(e.m_, 0);
            d[i] = 1;
            e.basis_.push_back(big->from_digits(d));
        }
    }
    std::vector<Elem> coord(e.m_ * e.m_, 0);  // column i = digits of basis[i]
    for (std::uint32_t i = 0; i < e.m_; ++i) {
        auto d = big->digits(e.basis_[i]);
        for (std::uint32_t r = 0; r < e.m_; ++r) coord[r * e.m_ + i] = d[r];
    }
    e.coord_map_ = invert_small(e.small_, std::move(coord), e.m_);
    if (e.coord_map_.empty()) throw validation_error("embedding: basis is linearly dependent");
    return e;
}

std::vector<Elem> SubfieldEmbedding::expand(Elem x) const {
    auto d = big_->digits(x);
    std::vector<Elem> c(m_, 0);
    for (std::uint32_t r = 0; r < m_; ++r) {
        Elem acc = 0;
        for (std::uint32_t j = 0; j < m_; ++j)
            acc = small_->add(acc, small_->mul(coord_map_[r * m_ + j], d[j]));
        c[r] = acc;
    }
    return c;
}

Elem SubfieldEmbedding::recombine(const std::vector<Elem>& coords) const {
    if (coords.size() != m_) throw validation_error("embedding: coordinate count mismatch");
    Elem acc = 0;
    for (std::uint32_t i = 0; i < m_; ++i)
        acc = big_->add(acc, big_->mul(big_->from_base(coords[i]), basis_[i]));
    return acc;
}

}  // namespace agcc
