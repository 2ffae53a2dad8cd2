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

#include "agcc/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace agcc {

Poly::Poly(FieldPtr f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    if (!f_) throw validation_error("Poly: null field");
    for (Elem e : c_) f_->check(e);
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::zero(const FieldPtr& f) { return Poly(f, {}); }
Poly Poly::one(const FieldPtr& f) { return Poly(f, {1}); }
Poly Poly::x(const FieldPtr& f) { return Poly(f, {0, 1}); }
Poly Poly::constant(const FieldPtr& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(const FieldPtr& f, std::size_t deg, Elem c) {
    std::vector<Elem> v(deg + 1, 0);
    v[deg] = c;
    return Poly(f, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    if (!f_->same(o.f_)) throw validation_error("Poly: mixed fields");
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(f_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    if (!f_->same(o.f_)) throw validation_error("Poly: mixed fields");
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(f_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (!f_->same(o.f_)) throw validation_error("Poly: mixed fields");
    if (is_zero() || o.is_zero()) return zero(f_);
    std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = f_->add(v[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(v));
}

Poly Poly::scale(Elem c) const {
    std::vector<Elem> v(c_);
    for (Elem& e : v) e = f_->mul(e, c);
    return Poly(f_, std::move(v));
}

bool Poly::operator==(const Poly& o) const { return f_->same(o.f_) && c_ == o.c_; }

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (!a.f_->same(b.f_)) throw validation_error("Poly: mixed fields");
    if (b.is_zero()) throw validation_error("Poly: division by zero polynomial");
    const FieldPtr& f = a.f_;
    if (a.degree() < b.degree()) return {zero(f), a};
    std::vector<Elem> rem(a.c_);
    std::vector<Elem> quo(a.c_.size() - b.c_.size() + 1, 0);
    Elem lead_inv = f->inv(b.lead());
    for (int i = static_cast<int>(rem.size()) - 1; i >= b.degree(); --i) {
        if (rem[i] == 0) continue;
        Elem q = f->mul(rem[i], lead_inv);
        quo[i - b.degree()] = q;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            rem[i - b.degree() + j] = f->sub(rem[i - b.degree() + j], f->mul(q, b.c_[j]));
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("Poly: inexact division");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = mod(u, v);
        u = v;
        v = r;
    }
    return u.is_zero() ? u : u.monic();
}

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scale(f_->inv(lead()));
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f_->add(f_->mul(acc, x), *it);
    return acc;
}

Poly Poly::powmod(std::uint64_t e, const Poly& modulus) const {
    Poly base = mod(*this, modulus);
    Poly acc = one(f_);
    while (e) {
        if (e & 1) acc = mod(acc * base, modulus);
        base = mod(base * base, modulus);
        e >>= 1;
    }
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i == 0) continue;
        if (c_[i] != 1) os << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace agcc
