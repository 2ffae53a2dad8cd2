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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "agcc/poly.hpp"

using namespace agcc;

static Poly random_poly(const FieldPtr& f, std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<Elem> dc(0, static_cast<Elem>(f->order() - 1));
    int d = dd(rng);
    std::vector<Elem> c(d + 1);
    for (auto& e : c) e = dc(rng);
    return Poly(f, std::move(c));
}

TEST_CASE("degree and trimming") {
    auto f2 = Field::prime(2);
    CHECK(Poly(f2, {1, 1, 0, 0}).degree() == 1);
    CHECK(Poly::zero(f2).degree() == -1);
    CHECK(Poly::zero(f2).is_zero());
}

TEST_CASE("divmod identity on random inputs") {
    std::mt19937 rng(7);
    for (auto& f : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
        for (int it = 0; it < 200; ++it) {
            Poly a = random_poly(f, rng, 6);
            Poly b = random_poly(f, rng, 4);
            if (b.is_zero()) continue;
            auto [q, r] = Poly::divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("gcd divides both and is monic") {
    std::mt19937 rng(11);
    auto f4 = Field::make(2, 2);
    for (int it = 0; it < 100; ++it) {
        Poly a = random_poly(f4, rng, 5);
        Poly b = random_poly(f4, rng, 5);
        Poly g = Poly::gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        CHECK(g.lead() == 1);
        if (!a.is_zero()) CHECK(Poly::mod(a, g).is_zero());
        if (!b.is_zero()) CHECK(Poly::mod(b, g).is_zero());
    }
}

TEST_CASE("gcd picks up a common factor") {
    auto f2 = Field::prime(2);
    Poly common(f2, {1, 1});  // 1 + x
    Poly a = common * Poly(f2, {1, 0, 1});
    Poly b = common * Poly(f2, {0, 1, 1});
    CHECK(Poly::mod(Poly::gcd(a, b), common).is_zero());
}

TEST_CASE("eval and powmod") {
    auto f3 = Field::prime(3);
    Poly p(f3, {1, 2, 1});  // 1 + 2x + x^2
    CHECK(p.eval(0) == 1);
    CHECK(p.eval(1) == 1);  // 1+2+1 = 4 = 1 mod 3
    Poly m(f3, {1, 0, 0, 1});
    // x^27 = x mod any degree-3 irreducible? only when m is irreducible; use identity x^(3^3) ≡ x
    auto f2 = Field::prime(2);
    Poly irr(f2, {1, 1, 0, 1});  // 1 + x + x^3, irreducible
    CHECK(Poly::x(f2).powmod(8, irr) == Poly::mod(Poly::x(f2), irr));
}

TEST_CASE("exact division faults on remainders") {
    auto f2 = Field::prime(2);
    CHECK_THROWS_AS(Poly::div_exact(Poly(f2, {1, 1, 1}), Poly(f2, {1, 1})), std::logic_error);
    CHECK(Poly::div_exact(Poly(f2, {1, 0, 1}), Poly(f2, {1, 1})) == Poly(f2, {1, 1}));
}
