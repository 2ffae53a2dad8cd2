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

#include "agcc/conv.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

namespace agcc {

SingletonData generalized_singleton(std::size_t n, std::size_t k, std::size_t gamma) {
    if (k < 1 || k > n) throw validation_error("singleton: need 1 <= k <= n");
    SingletonData d;
    d.s = (n - k) * (gamma / k + 1) + gamma + 1;
    d.r = std::max(n, d.s);
    return d;
}

ConvCode::ConvCode(PolyMatrix g, std::optional<std::size_t> lb)
    : gen_(std::move(g)),
      n_(gen_.cols()),
      k_(gen_.rows()),
      gamma_(gen_.degree()),
      m_(gen_.memory()),
      df_lb_(lb) {
    sing_ = generalized_singleton(n_, k_, gamma_);
}

ConvCode ConvCode::from_generator(PolyMatrix g, std::optional<std::size_t> df_lower,
                                  const Guards& guards) {
    if (!g.is_basic(guards)) throw validation_error("conv: generator matrix is not basic");
    if (!g.is_reduced()) throw validation_error("conv: generator matrix is not reduced");
    return ConvCode(std::move(g), df_lower);
}

std::vector<MatrixGF> parity_split(const MatrixGF& h, const std::vector<std::size_t>& row_counts) {
    if (row_counts.empty()) throw validation_error("split: empty split");
    std::size_t total = 0;
    for (std::size_t c : row_counts) {
        if (c == 0) throw validation_error("split: zero-sized split part");
        total += c;
    }
    if (total != h.rows()) throw validation_error("split: row counts inconsistent with H");
    if (h.rank() != h.rows()) throw validation_error("split: H must have full row rank");

    const std::size_t kappa = row_counts[0];
    std::vector<MatrixGF> parts;
    std::size_t at = 0;
    for (std::size_t idx = 0; idx < row_counts.size(); ++idx) {
        MatrixGF part = h.row_range(at, at + row_counts[idx]);
        at += row_counts[idx];
        if (idx == 0) {
            if (part.rank() != kappa) throw validation_error("split: rk H_0 must equal kappa");
        } else {
            if (row_counts[idx] > kappa || part.rank() > kappa)
                throw validation_error("split: rk H_i must be <= kappa");
            if (part.rows() < kappa)
                part = part.vstack(MatrixGF(h.field(), kappa - part.rows(), h.cols()));
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

PolyMatrix generator_from_split(const std::vector<MatrixGF>& parts) {
    PolyMatrix g{parts};
    // Guaranteed for any valid split; a failure here is an internal fault.
    if (!g.is_basic() || !g.is_reduced())
        throw std::logic_error("split: constructed matrix failed basic/reduced certification");
    return g;
}

ConvCode unit_memory_from_block(const LinearCode& c, std::size_t gamma0, const Guards& g) {
    if (gamma0 < 1) throw validation_error("unit_memory: gamma0 must be >= 1");
    if (c.is_zero_code()) throw validation_error("unit_memory: zero code");
    const std::size_t k = c.dim();
    if (k < 2 * gamma0)
        throw validation_error("unit_memory: need k >= 2*gamma0 (zero-row padding infeasible)");
    const std::size_t kappa = k - gamma0;
    const MatrixGF& gen = c.generator();  // canonical RREF row order
    MatrixGF a0 = gen.row_range(0, kappa);
    MatrixGF a1 = gen.row_range(kappa, k).vstack(MatrixGF(c.field(), k - 2 * gamma0, c.length()));

    std::optional<std::size_t> lb;
    try {
        lb = c.min_distance(g);
    } catch (const guard_exceeded&) {
        // fall back to the carried claim
        if (c.distance_interval().lo > 1) lb = c.distance_interval().lo;
    }
    try {
        return ConvCode::from_generator(PolyMatrix({std::move(a0), std::move(a1)}), lb, g);
    } catch (const validation_error& e) {
        // The split hypotheses hold by construction, so this cannot happen.
        throw std::logic_error(std::string("unit_memory: certification failed: ") + e.what());
    }
}

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        v *= base;
        if (v > cap) return cap + 1;
    }
    return v;
}

void add_scaled_row(const FieldPtr& f, std::vector<Elem>& acc, const MatrixGF& m, std::size_t row,
                    Elem c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        acc[j] = f->add(acc[j], f->mul(c, m.at(row, j)));
}

}  // namespace

FreeDistResult free_distance(const ConvCode& v, const Guards& g) {
    const PolyMatrix& gen = v.generator();
    const FieldPtr& f = gen.field();
    const std::uint64_t q = f->order();
    const std::size_t kappa = gen.rows(), n = gen.cols();

    if (gen.memory() > 1)
        throw validation_error("free_distance: memory > 1, use free_distance_truncated");

    const MatrixGF& a0 = gen.coeff(0);
    // memory rows: degree-1 rows; the rest are free rows
    std::vector<std::size_t> mem_rows, free_rows;
    for (std::size_t i = 0; i < kappa; ++i)
        (gen.row_degree(i) == 1 ? mem_rows : free_rows).push_back(i);
    const std::size_t gamma = mem_rows.size();

    const std::uint64_t states = checked_pow(q, gamma, g.max_states);
    if (states > g.max_states) throw guard_exceeded("free_distance: state guard exceeded");
    const std::uint64_t cosets = checked_pow(q, free_rows.size(), g.max_cosets);
    if (cosets > g.max_cosets) throw guard_exceeded("free_distance: coset guard exceeded");

    // all vectors spanned by the free rows of A_0
    std::vector<std::vector<Elem>> span(cosets, std::vector<Elem>(n, 0));
    for (std::uint64_t idx = 1; idx < cosets; ++idx) {
        std::uint64_t x = idx;
        std::vector<Elem>& vec = span[idx];
        for (std::size_t r = 0; r < free_rows.size(); ++r) {
            add_scaled_row(f, vec, a0, free_rows[r], static_cast<Elem>(x % q));
            x /= q;
        }
    }

    std::size_t d_zero = kInf;
    for (std::uint64_t idx = 1; idx < cosets; ++idx) {
        std::size_t w = weight(span[idx]);
        if (w == 0)
            throw std::logic_error("free_distance: zero-weight constant input (not basic)");
        d_zero = std::min(d_zero, w);
    }

    if (gamma == 0) {
        if (d_zero == kInf) throw std::logic_error("free_distance: empty generator");
        return {d_zero, 1};
    }

    const MatrixGF* a1 = gen.memory() >= 1 ? &gen.coeff(1) : nullptr;

    auto edge_weight = [&](std::uint64_t prev, std::uint64_t next) -> std::size_t {
        std::vector<Elem> base(n, 0);
        std::uint64_t x = next;
        for (std::size_t r = 0; r < gamma; ++r) {
            add_scaled_row(f, base, a0, mem_rows[r], static_cast<Elem>(x % q));
            x /= q;
        }
        x = prev;
        for (std::size_t r = 0; r < gamma; ++r) {
            add_scaled_row(f, base, *a1, mem_rows[r], static_cast<Elem>(x % q));
            x /= q;
        }
        std::size_t best = kInf;
        std::vector<Elem> sum(n);
        for (std::uint64_t idx = 0; idx < cosets; ++idx) {
            for (std::size_t j = 0; j < n; ++j) sum[j] = f->add(base[j], span[idx][j]);
            best = std::min(best, weight(sum));
            if (best == 0) break;
        }
        return best;
    };

    // lightest diverge-from-zero / remerge-to-zero path (Dijkstra; weights
    // are nonnegative, zero-weight edges permitted)
    std::vector<std::size_t> dist(states, kInf), plen(states, 0);
    std::vector<bool> done(states, false);
    using Node = std::tuple<std::size_t, std::size_t, std::uint64_t>;  // weight, length, state
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
    for (std::uint64_t s = 1; s < states; ++s) {
        dist[s] = edge_weight(0, s);
        plen[s] = 1;
        pq.emplace(dist[s], plen[s], s);
    }
    std::size_t d_loop = kInf, loop_len = 0;
    while (!pq.empty()) {
        auto [w, len, s] = pq.top();
        pq.pop();
        if (done[s] || w > dist[s]) continue;
        done[s] = true;
        if (w >= d_loop) continue;
        // remerge
        std::size_t wr = w + edge_weight(s, 0);
        if (wr < d_loop || (wr == d_loop && len + 1 < loop_len)) {
            d_loop = wr;
            loop_len = len + 1;
        }
        for (std::uint64_t t = 1; t < states; ++t) {
            if (done[t]) continue;
            std::size_t wt = w + edge_weight(s, t);
            if (wt < dist[t] || (wt == dist[t] && len + 1 < plen[t])) {
                dist[t] = wt;
                plen[t] = len + 1;
                pq.emplace(wt, len + 1, t);
            }
        }
    }

    FreeDistResult res;
    if (d_zero <= d_loop) {
        res.distance = d_zero;
        res.witness_blocks = 1;
    } else {
        res.distance = d_loop;
        res.witness_blocks = loop_len;
    }
    if (res.distance == 0 || res.distance == kInf)
        throw std::logic_error("free_distance: degenerate result (matrix not basic?)");
    return res;
}

std::size_t free_distance_truncated(const ConvCode& v, std::size_t horizon, const Guards& g) {
    if (horizon < 1) throw validation_error("free_distance_truncated: horizon must be >= 1");
    const PolyMatrix& gen = v.generator();
    const FieldPtr& f = gen.field();
    const std::uint64_t q = f->order();
    const std::size_t kappa = gen.rows(), n = gen.cols();

    if (checked_pow(q, kappa * horizon, g.max_trunc_space) > g.max_trunc_space)
        throw guard_exceeded("free_distance_truncated: q^(k*L) guard exceeded");

    const std::uint64_t inputs = checked_pow(q, kappa, g.max_trunc_space);
    const bool has_mem = gen.memory() >= 1;
    const MatrixGF* a1 = has_mem ? &gen.coeff(1) : nullptr;

    std::size_t best = kInf;
    std::vector<std::vector<Elem>> blocks(horizon, std::vector<Elem>(kappa, 0));

    auto decode_input = [&](std::uint64_t idx, std::vector<Elem>& u) {
        for (std::size_t i = 0; i < kappa; ++i) {
            u[i] = static_cast<Elem>(idx % q);
            idx /= q;
        }
    };

    auto rec = [&](auto&& self, std::size_t depth, std::size_t acc) -> void {
        if (acc >= best) return;
        if (depth == horizon) {
            std::size_t tail = 0;
            if (has_mem) {
                std::vector<Elem> out(n, 0);
                for (std::size_t i = 0; i < kappa; ++i)
                    add_scaled_row(f, out, *a1, i, blocks[horizon - 1][i]);
                tail = weight(out);
            }
            best = std::min(best, acc + tail);
            return;
        }
        for (std::uint64_t idx = 0; idx < inputs; ++idx) {
            if (depth == 0 && idx == 0) continue;  // first block must be nonzero
            decode_input(idx, blocks[depth]);
            std::vector<Elem> out(n, 0);
            for (std::size_t i = 0; i < kappa; ++i)
                add_scaled_row(f, out, gen.coeff(0), i, blocks[depth][i]);
            if (has_mem && depth > 0)
                for (std::size_t i = 0; i < kappa; ++i)
                    add_scaled_row(f, out, *a1, i, blocks[depth - 1][i]);
            std::size_t w = acc + weight(out);
            if (w < best) self(self, depth + 1, w);
        }
        // restore: deeper levels read blocks[depth], so clear after the loop
        std::fill(blocks[depth].begin(), blocks[depth].end(), 0);
    };
    rec(rec, 0, 0);

    if (best == 0) throw std::logic_error("free_distance_truncated: zero-weight nonzero input");
    if (best == kInf) throw std::logic_error("free_distance_truncated: no input enumerated");
    return best;
}

}  // namespace agcc
