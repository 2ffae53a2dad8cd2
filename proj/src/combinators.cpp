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

#include "agcc/combinators.hpp"

#include <algorithm>

namespace agcc {

namespace {

void require_operand(const LinearCode& c, const char* op) {
    if (c.is_zero_code())
        throw validation_error(std::string(op) + ": zero code is not a valid operand");
}

void require_same_field(const LinearCode& a, const LinearCode& b, const char* op) {
    if (!a.field()->same(b.field()))
        throw validation_error(std::string(op) + ": field mismatch");
}

void fill(TransformRecord* rec, const char* kind, const LinearCode& out) {
    if (!rec) return;
    rec->kind = kind;
    rec->n_out = out.length();
    rec->k_out = out.dim();
    rec->d_lo = out.distance_interval().lo;
    rec->d_hi = out.distance_interval().hi;
}

}  // namespace

LinearCode expand_code(const LinearCode& c, const SubfieldEmbedding& emb, TransformRecord* rec) {
    require_operand(c, "expand");
    if (!c.field()->same(emb.big()))
        throw validation_error("expand: code field differs from the embedding's big field");
    const FieldPtr& big = emb.big();
    const FieldPtr& small = emb.small();
    const std::uint32_t m = emb.m();
    const std::size_t n = c.length(), k = c.dim();

    std::vector<std::vector<Elem>> rows;
    rows.reserve(m * k);
    for (std::size_t i = 0; i < k; ++i) {
        auto g = c.generator().row(i);
        for (std::uint32_t t = 0; t < m; ++t) {
            std::vector<Elem> out;
            out.reserve(m * n);
            for (std::size_t j = 0; j < n; ++j) {
                Elem scaled = big->mul(emb.basis()[t], g[j]);
                auto coords = emb.expand(scaled);
                out.insert(out.end(), coords.begin(), coords.end());
            }
            rows.push_back(std::move(out));
        }
    }
    LinearCode out = LinearCode::from_generator(MatrixGF::from_rows(small, rows));
    if (out.dim() != m * k) throw std::logic_error("expand: expansion lost rank");
    out.claim_distance(c.distance_interval().lo, m * n);
    if (rec) {
        fill(rec, "expand", out);
        rec->expand_m = m;
    }
    return out;
}

LinearCode extend_code(const LinearCode& c, TransformRecord* rec) {
    require_operand(c, "extend");
    const FieldPtr& f = c.field();
    const std::size_t n = c.length(), k = c.dim();
    MatrixGF g(f, k, n + 1);
    for (std::size_t i = 0; i < k; ++i) {
        Elem sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            g.at(i, j) = c.generator().at(i, j);
            sum = f->add(sum, c.generator().at(i, j));
        }
        g.at(i, n) = f->neg(sum);
    }
    LinearCode out = LinearCode::from_generator(g);
    auto d = c.distance_interval();
    out.claim_distance(d.lo, std::min(d.hi + 1, n + 1));
    fill(rec, "extend", out);
    return out;
}

LinearCode puncture_code(const LinearCode& c, std::optional<std::size_t> coord,
                         TransformRecord* rec) {
    require_operand(c, "puncture");
    const std::size_t n = c.length();
    if (n < 2) throw validation_error("puncture: length must be >= 2");
    std::size_t i = coord.value_or(n);  // default: last coordinate
    if (i < 1 || i > n) throw validation_error("puncture: coordinate out of range");
    MatrixGF g = c.generator().drop_col(i - 1);
    if (g.is_zero() || g.rank() < c.dim())
        throw validation_error("puncture: dimension would drop (weight-1 codeword on coordinate)");
    LinearCode out = LinearCode::from_generator(g);
    auto d = c.distance_interval();
    out.claim_distance(d.lo > 1 ? d.lo - 1 : 1, std::min(d.hi, n - 1));
    if (rec) {
        fill(rec, "puncture", out);
        rec->coord = i;
    }
    return out;
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b, TransformRecord* rec) {
    require_operand(a, "direct_sum");
    require_operand(b, "direct_sum");
    require_same_field(a, b, "direct_sum");
    const FieldPtr& f = a.field();
    MatrixGF g(f, a.dim() + b.dim(), a.length() + b.length());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.length(); ++j) g.at(i, j) = a.generator().at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.length(); ++j)
            g.at(a.dim() + i, a.length() + j) = b.generator().at(i, j);
    LinearCode out = LinearCode::from_generator(g);
    auto da = a.distance_interval(), db = b.distance_interval();
    // d = min(d1, d2) exactly
    out.claim_distance(std::min(da.lo, db.lo), std::min(da.hi, db.hi));
    fill(rec, "direct_sum", out);
    return out;
}

LinearCode u_u_plus_v(const LinearCode& a, const LinearCode& b, TransformRecord* rec) {
    require_operand(a, "u_u_plus_v");
    require_operand(b, "u_u_plus_v");
    require_same_field(a, b, "u_u_plus_v");
    if (a.length() != b.length()) throw validation_error("u_u_plus_v: length mismatch");
    const FieldPtr& f = a.field();
    const std::size_t n = a.length();
    MatrixGF g(f, a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            g.at(i, j) = a.generator().at(i, j);
            g.at(i, n + j) = a.generator().at(i, j);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) g.at(a.dim() + i, n + j) = b.generator().at(i, j);
    LinearCode out = LinearCode::from_generator(g);
    auto da = a.distance_interval(), db = b.distance_interval();
    // d = min(2 d1, d2) exactly
    out.claim_distance(std::min(2 * da.lo, db.lo), std::min(2 * da.hi, db.hi));
    fill(rec, "u_u_plus_v", out);
    return out;
}

LinearCode product_code(const LinearCode& a, const LinearCode& b, TransformRecord* rec) {
    require_operand(a, "product");
    require_operand(b, "product");
    require_same_field(a, b, "product");
    if (a.length() * b.length() > (std::size_t(1) << 16))
        throw guard_exceeded("product: n1*n2 too large");
    LinearCode out = LinearCode::from_generator(a.generator().kronecker(b.generator()));
    if (out.dim() != a.dim() * b.dim()) throw std::logic_error("product: rank mismatch");
    auto da = a.distance_interval(), db = b.distance_interval();
    // d = d1 * d2 exactly
    out.claim_distance(da.lo * db.lo, std::min(da.hi * db.hi, out.length()));
    fill(rec, "product", out);
    return out;
}

}  // namespace agcc
