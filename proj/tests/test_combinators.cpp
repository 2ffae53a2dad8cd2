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

#include "agcc/combinators.hpp"

using namespace agcc;

namespace {

MatrixGF hamming74_gen(const FieldPtr& f2) {
    return MatrixGF::from_rows(f2, {{1, 1, 0, 1, 0, 0, 0},
                                    {0, 1, 1, 0, 1, 0, 0},
                                    {0, 0, 1, 1, 0, 1, 0},
                                    {0, 0, 0, 1, 1, 0, 1}});
}

LinearCode random_code(const FieldPtr& f, std::mt19937& rng, std::size_t k, std::size_t n) {
    std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(f->order() - 1));
    while (true) {
        MatrixGF m(f, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
        if (!m.is_zero()) return LinearCode::from_generator(m);
    }
}

}  // namespace

TEST_CASE("extend") {
    auto f2 = Field::prime(2);
    auto ham = LinearCode::from_generator(hamming74_gen(f2));
    ham.min_distance();
    auto ext = extend_code(ham);
    CHECK(ext.length() == 8);
    CHECK(ext.dim() == 4);
    CHECK(ext.min_distance() == 4);

    // parity of (1,1) is 0, so the distance stays 2
    auto rep2 = LinearCode::from_generator(MatrixGF(f2, 1, 2, {1, 1}));
    rep2.min_distance();
    auto e2 = extend_code(rep2);
    CHECK(e2.min_distance() == 2);

    // even-weight [4,3,2]: appended coordinate is always 0
    auto even = LinearCode::from_generator(
        MatrixGF::from_rows(f2, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
    even.min_distance();
    auto ee = extend_code(even);
    CHECK(ee.length() == 5);
    CHECK(ee.dim() == 3);
    CHECK(ee.min_distance() == 2);
}

TEST_CASE("puncture") {
    auto f2 = Field::prime(2);
    auto ham = LinearCode::from_generator(hamming74_gen(f2));
    ham.min_distance();
    auto p = puncture_code(ham);  // last coordinate by default
    CHECK(p.length() == 6);
    CHECK(p.dim() == 4);
    CHECK(p.min_distance() == 2);

    auto rep = LinearCode::from_generator(MatrixGF(f2, 1, 5, {1, 1, 1, 1, 1}));
    for (std::size_t i = 1; i <= 5; ++i) {
        auto pr = puncture_code(rep, i);
        CHECK(pr.length() == 4);
        CHECK(pr.min_distance() == 4);
    }

    // weight-1 codeword supported on the punctured coordinate: rejected
    auto full = LinearCode::from_generator(MatrixGF::identity(f2, 2));
    CHECK_THROWS_AS(puncture_code(full, 1), validation_error);
}

TEST_CASE("direct sum") {
    auto f2 = Field::prime(2);
    auto r3 = LinearCode::from_generator(MatrixGF(f2, 1, 3, {1, 1, 1}));
    r3.min_distance();
    auto s = direct_sum(r3, r3);
    CHECK(s.length() == 6);
    CHECK(s.dim() == 2);
    CHECK(s.min_distance() == 3);

    auto ham = LinearCode::from_generator(hamming74_gen(f2));
    auto simplex = ham.dual();
    ham.min_distance();
    simplex.min_distance();
    auto hs = direct_sum(ham, simplex);
    CHECK(hs.length() == 14);
    CHECK(hs.dim() == 7);
    CHECK(hs.min_distance() == 3);

    CHECK_THROWS_AS(direct_sum(r3, LinearCode::zero(f2, 3)), validation_error);
    std::mt19937 rng(1);
    auto ternary = random_code(Field::prime(3), rng, 1, 3);
    CHECK_THROWS_AS(direct_sum(r3, ternary), validation_error);
}

TEST_CASE("u|u+v") {
    auto f2 = Field::prime(2);
    auto full2 = LinearCode::from_generator(MatrixGF::identity(f2, 2));
    auto rep2 = LinearCode::from_generator(MatrixGF(f2, 1, 2, {1, 1}));
    full2.min_distance();
    rep2.min_distance();
    auto uv = u_u_plus_v(full2, rep2);
    CHECK(uv.length() == 4);
    CHECK(uv.dim() == 3);
    CHECK(uv.min_distance() == 2);

    auto rep4 = LinearCode::from_generator(MatrixGF(f2, 1, 4, {1, 1, 1, 1}));
    auto even4 = LinearCode::from_generator(
        MatrixGF::from_rows(f2, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
    rep4.min_distance();
    even4.min_distance();
    auto uv2 = u_u_plus_v(rep4, even4);
    CHECK(uv2.length() == 8);
    CHECK(uv2.dim() == 4);
    CHECK(uv2.min_distance() == 2);

    CHECK_THROWS_AS(u_u_plus_v(full2, rep4), validation_error);

    SUBCASE("v = 0 slice duplicates u") {
        auto w = uv.encode({1, 0, 0});  // first rows carry (u, u)
        CHECK(weight(w) % 2 == 0);
    }
}

TEST_CASE("product") {
    auto f2 = Field::prime(2);
    auto even3 = LinearCode::from_generator(MatrixGF::from_rows(f2, {{1, 1, 0}, {0, 1, 1}}));
    even3.min_distance();
    auto pr = product_code(even3, even3);
    CHECK(pr.length() == 9);
    CHECK(pr.dim() == 4);
    CHECK(pr.min_distance() == 4);

    auto rep3 = LinearCode::from_generator(MatrixGF(f2, 1, 3, {1, 1, 1}));
    auto rep4 = LinearCode::from_generator(MatrixGF(f2, 1, 4, {1, 1, 1, 1}));
    auto rr = product_code(rep3, rep4);
    CHECK(rr.length() == 12);
    CHECK(rr.dim() == 1);
    CHECK(rr.min_distance() == 12);

    auto ham = LinearCode::from_generator(hamming74_gen(f2));
    ham.min_distance();
    rep3.min_distance();
    auto hp = product_code(ham, rep3);
    CHECK(hp.length() == 21);
    CHECK(hp.dim() == 4);
    CHECK(hp.min_distance() == 9);
}

TEST_CASE("expansion") {
    auto f4 = Field::make(2, 2);
    auto emb = SubfieldEmbedding::create(f4, 2);
    auto big = emb.big();

    // [4,2,3] RS over GF(16)
    MatrixGF rs(big, 2, 4);
    for (Elem x = 0; x < 4; ++x) {
        rs.at(0, x) = 1;
        rs.at(1, x) = big->exp(x);  // four distinct nonzero points
    }
    auto rsc = LinearCode::from_generator(rs);
    CHECK(rsc.min_distance() == 3);

    auto ex = expand_code(rsc, emb);
    CHECK(ex.length() == 8);
    CHECK(ex.dim() == 4);
    CHECK(ex.min_distance() >= 3);

    SUBCASE("expanded codewords come from big-field codewords") {
        // every expanded codeword has at least as many nonzero blocks as the
        // original has nonzero symbols
        for (Elem m0 = 0; m0 < 16; ++m0)
            for (Elem m1 = 0; m1 < 16; ++m1) {
                auto cw = rsc.encode({m0, m1});
                std::vector<Elem> flat;
                for (Elem sym : cw) {
                    auto coords = emb.expand(sym);
                    flat.insert(flat.end(), coords.begin(), coords.end());
                }
                CHECK(ex.contains(flat));
            }
    }

    SUBCASE("field mismatch rejected") {
        auto f2 = Field::prime(2);
        auto c2 = LinearCode::from_generator(MatrixGF(f2, 1, 3, {1, 1, 1}));
        CHECK_THROWS_AS(expand_code(c2, emb), validation_error);
    }
}

TEST_CASE("distance identities vs brute force on random codes") {
    std::mt19937 rng(23);
    for (auto& f : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
        for (int it = 0; it < 12; ++it) {
            auto a = random_code(f, rng, 2, 6);
            auto b = random_code(f, rng, 2, 6);
            std::size_t da = a.min_distance(), db = b.min_distance();

            std::size_t de = extend_code(a).min_distance();
            CHECK((de == da || de == da + 1));

            if (da >= 2) {
                std::size_t dp = puncture_code(a).min_distance();
                CHECK((dp == da - 1 || dp == da));
            }

            CHECK(direct_sum(a, b).min_distance() == std::min(da, db));
            CHECK(u_u_plus_v(a, b).min_distance() == std::min(2 * da, db));
            CHECK(product_code(a, b).min_distance() == da * db);
        }
    }
}

TEST_CASE("puncture then extend round trip on the Hamming example") {
    auto f2 = Field::prime(2);
    auto ham = LinearCode::from_generator(hamming74_gen(f2));
    auto ext = extend_code(ham);
    auto back = puncture_code(ext, 8);
    CHECK(back.length() == 7);
    CHECK(back.dim() == 4);
    CHECK(back.min_distance() == 3);
    CHECK(back.same_code(ham));
}

TEST_CASE("transform records carry matching claims") {
    auto f2 = Field::prime(2);
    auto ham = LinearCode::from_generator(hamming74_gen(f2));
    ham.min_distance();
    TransformRecord rec;
    auto ext = extend_code(ham, &rec);
    CHECK(rec.kind == "extend");
    CHECK(rec.n_out == ext.length());
    CHECK(rec.k_out == ext.dim());
    std::size_t d = ext.min_distance();
    CHECK(rec.d_lo <= d);
    CHECK(d <= rec.d_hi);
}
