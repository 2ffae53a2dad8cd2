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

#ifndef AGCC_POLY_HPP
#define AGCC_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agcc/field.hpp"

namespace agcc {

/// Univariate polynomial over a Field. Coefficients low-to-high, always
/// trimmed so the leading coefficient is nonzero; the zero polynomial has an
/// empty coefficient vector and degree -1.
class Poly {
   public:
    Poly(FieldPtr f, std::vector<Elem> coeffs);
    static Poly zero(const FieldPtr& f);
    static Poly one(const FieldPtr& f);
    static Poly x(const FieldPtr& f);
    static Poly constant(const FieldPtr& f, Elem c);
    static Poly monomial(const FieldPtr& f, std::size_t deg, Elem c = 1);

    const FieldPtr& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scale(Elem c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Exact division; throws logic_error on a nonzero remainder.
    static Poly div_exact(const Poly& a, const Poly& b);
    static Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);

    Poly monic() const;
    Elem eval(Elem x) const;
    /// this^e mod modulus.
    Poly powmod(std::uint64_t e, const Poly& modulus) const;

    std::string str() const;  // e.g. "1 + x + x^3"

   private:
    FieldPtr f_;
    std::vector<Elem> c_;
    void trim();
};

}  // namespace agcc

#endif
