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

#include "agcc/field.hpp"

using namespace agcc;

TEST_CASE("prime field basics") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->order() == 2);
    CHECK(f2->modulus() == std::vector<Elem>{0, 1});
    CHECK(f2->add(1, 1) == 0);

    auto f3 = Field::prime(3);
    CHECK(f3->mul(2, 2) == 1);
    CHECK(f3->inv(2) == 2);

    CHECK_THROWS_AS(Field::prime(4), validation_error);
    CHECK_THROWS_AS(Field::prime(1), validation_error);
}

TEST_CASE("GF(4) arithmetic under x^2+x+1") {
    auto f4 = Field::make(2, 2, std::vector<Elem>{1, 1, 1});
    // element 2 encodes alpha; alpha^2 = alpha + 1 = element 3
    CHECK(f4->mul(2, 2) == 3);
    CHECK(f4->add(2, 2) == 0);
    CHECK(f4->inv(2) == 3);
    CHECK(f4->mul(2, 3) == 1);
}

TEST_CASE("reducible modulus rejected") {
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<Elem>{1, 0, 1}), validation_error);  // (x+1)^2
}

TEST_CASE("division by zero and range checks") {
    auto f4 = Field::make(2, 2);
    CHECK_THROWS_AS(f4->inv(0), validation_error);
    CHECK_THROWS_AS(f4->add(4, 0), validation_error);
}

TEST_CASE("field axioms, exhaustive on small fields") {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {7, 1}}) {
        auto f = Field::make(p, e);
        const Elem q = static_cast<Elem>(f->order());
        for (Elem a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            for (Elem b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                // Frobenius is additive
                CHECK(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
                for (Elem c = 0; c < q; ++c) {
                    if (c > 4 && b > 4) break;  // keep the cube small
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                }
            }
        }
    }
}

TEST_CASE("generator has full multiplicative order") {
    auto f = Field::make(2, 4);
    Elem g = f->generator();
    Elem x = g;
    std::size_t ord = 1;
    while (x != 1) {
        x = f->mul(x, g);
        ++ord;
    }
    CHECK(ord == f->order() - 1);
}

TEST_CASE("subfield embedding, polynomial basis") {
    auto f4 = Field::make(2, 2);
    auto emb = SubfieldEmbedding::create(f4, 2);
    CHECK(emb.big()->order() == 16);

    CHECK(emb.expand(0) == std::vector<Elem>{0, 0});
    // beta = residue of the extension variable = digits (0, 1)
    Elem beta = emb.big()->from_digits({0, 1});
    CHECK(emb.expand(beta) == std::vector<Elem>{0, 1});
    // alpha*beta + 1 has digits (1, alpha)
    Elem x = emb.big()->from_digits({1, 2});
    CHECK(emb.expand(x) == std::vector<Elem>{1, 2});

    SUBCASE("round trip, exhaustive") {
        for (Elem a = 0; a < emb.big()->order(); ++a)
            CHECK(emb.recombine(emb.expand(a)) == a);
    }
    SUBCASE("expansion is GF(q)-linear") {
        auto big = emb.big();
        for (Elem a = 0; a < big->order(); ++a)
            for (Elem b = 0; b < big->order(); ++b)
                for (Elem lam = 0; lam < f4->order(); ++lam) {
                    Elem y = big->add(a, big->mul(big->from_base(lam), b));
                    auto ea = emb.expand(a), eb = emb.expand(b), ey = emb.expand(y);
                    for (std::uint32_t i = 0; i < 2; ++i)
                        CHECK(ey[i] == f4->add(ea[i], f4->mul(lam, eb[i])));
                }
    }
}

TEST_CASE("user-supplied basis") {
    auto f2 = Field::prime(2);
    // normal basis (alpha, alpha^2) of GF(4)/GF(2)
    auto emb = SubfieldEmbedding::create(f2, 2, std::vector<Elem>{2, 3});
    for (Elem a = 0; a < 4; ++a) CHECK(emb.recombine(emb.expand(a)) == a);

    CHECK_THROWS_AS(SubfieldEmbedding::create(f2, 2, std::vector<Elem>{2, 2}), validation_error);
    CHECK_THROWS_AS(SubfieldEmbedding::create(f2, 1), validation_error);
}

TEST_CASE("deterministic default modulus") {
    auto a = Field::make(2, 3);
    auto b = Field::make(2, 3);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->same(b));
    CHECK_FALSE(a->same(Field::make(2, 2)));
}
