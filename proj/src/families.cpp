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

#include "agcc/families.hpp"

#include <numeric>
#include <set>

namespace agcc {

Rational Rational::make(std::uint64_t n, std::uint64_t d) {
    if (d == 0) throw validation_error("rational: zero denominator");
    std::uint64_t g = std::gcd(n, d);
    return Rational{n / g, d / g};
}

FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "cyclic_catalog") return FamilyKind::cyclic_catalog;
    if (s == "bch") return FamilyKind::bch;
    if (s == "reed_solomon") return FamilyKind::reed_solomon;
    if (s == "reed_muller") return FamilyKind::reed_muller;
    if (s == "user_files") return FamilyKind::user_files;
    throw validation_error("family: unknown kind '" + s + "'");
}

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::cyclic_catalog: return "cyclic_catalog";
        case FamilyKind::bch: return "bch";
        case FamilyKind::reed_solomon: return "reed_solomon";
        case FamilyKind::reed_muller: return "reed_muller";
        case FamilyKind::user_files: return "user_files";
    }
    throw std::logic_error("family: bad kind enum");
}

Poly minimal_polynomial(const FieldPtr& ext, Elem beta) {
    const FieldPtr& base = ext->base();
    if (!base) throw validation_error("minimal_polynomial: not an extension field");
    const std::uint64_t qb = base->order();

    Poly prod = Poly::one(ext);
    Elem c = beta;
    do {
        prod = prod * Poly(ext, {ext->neg(c), 1});
        c = ext->pow(c, qb);
    } while (c != beta);

    std::vector<Elem> down(prod.degree() + 1);
    for (int i = 0; i <= prod.degree(); ++i) {
        Elem e = prod.coeff(static_cast<std::size_t>(i));
        if (!ext->is_base_element(e))
            throw std::logic_error("minimal_polynomial: coefficient outside the base field");
        down[i] = ext->digits(e)[0];
    }
    return Poly(base, std::move(down));
}

namespace {

std::size_t mul_order(std::uint64_t q, std::uint64_t n) {
    if (n < 2 || std::gcd(q, n) != 1)
        throw validation_error("mul_order: need n >= 2 coprime to q");
    std::size_t s = 1;
    std::uint64_t t = q % n;
    while (t != 1) {
        t = t * (q % n) % n;
        ++s;
    }
    return s;
}

LinearCode cyclic_from_genpoly(const Poly& g, std::size_t n) {
    const std::size_t deg = static_cast<std::size_t>(g.degree());
    const std::size_t k = n - deg;
    MatrixGF m(g.field(), k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= deg; ++j) m.at(i, i + j) = g.coeff(j);
    return LinearCode::from_generator(m);
}

/// BCH code of design distance delta; nullopt when the length is not
/// admissible (shares a factor with q, or needs a field past the guard, or
/// leaves no information positions).
std::optional<LinearCode> bch_code(const FieldPtr& f, std::size_t n, std::size_t delta,
                                   const Guards& guards) {
    const std::uint64_t q = f->order();
    if (n < 3 || delta < 2 || delta > n) return std::nullopt;
    if (n % f->characteristic() == 0 || std::gcd(q, static_cast<std::uint64_t>(n)) != 1)
        return std::nullopt;
    const std::size_t s = mul_order(q, n);

    FieldPtr ext;
    if (s > 1) {
        std::uint64_t big = 1;
        for (std::size_t i = 0; i < s; ++i) {
            big *= q;
            if (big > guards.max_field_order) return std::nullopt;
        }
        ext = Field::extension(f, static_cast<std::uint32_t>(s));
    }

    Poly g = Poly::one(f);
    std::set<std::size_t> covered;
    for (std::size_t i = 1; i < delta; ++i) {
        std::size_t e = i % n;
        if (covered.count(e)) continue;
        std::size_t c = e;
        do {
            covered.insert(c);
            c = c * (q % n) % n;
        } while (c != e);
        if (s == 1) {
            Elem alpha = f->exp((q - 1) / n * e);
            g = g * Poly(f, {f->neg(alpha), 1});
        } else {
            Elem alpha = ext->exp((ext->order() - 1) / n * e);
            g = g * minimal_polynomial(ext, alpha);
        }
    }
    if (static_cast<std::size_t>(g.degree()) >= n) return std::nullopt;

    LinearCode code = cyclic_from_genpoly(g, n);
    code.claim_distance(delta, n);
    return code;
}

LinearCode rs_code(const FieldPtr& f, std::size_t n, std::size_t k) {
    const std::uint64_t q = f->order();
    if (n < 2 || (q - 1) % n != 0)
        throw validation_error("reed_solomon: length must divide q - 1");
    if (k < 1 || k >= n) throw validation_error("reed_solomon: need 1 <= k < n");
    Poly g = Poly::one(f);
    for (std::size_t i = 1; i <= n - k; ++i) {
        Elem alpha = f->exp((q - 1) / n * i);
        g = g * Poly(f, {f->neg(alpha), 1});
    }
    LinearCode code = cyclic_from_genpoly(g, n);
    code.claim_distance(n - k + 1, n - k + 1);
    return code;
}

LinearCode rm_code(std::uint32_t r, std::uint32_t m) {
    if (m < 1 || m > 16 || r > m) throw validation_error("reed_muller: need 0 <= r <= m <= 16");
    auto f2 = Field::prime(2);
    const std::size_t n = std::size_t(1) << m;
    std::vector<std::vector<Elem>> rows;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (static_cast<std::uint32_t>(__builtin_popcount(mask)) > r) continue;
        std::vector<Elem> row(n);
        for (std::size_t x = 0; x < n; ++x) row[x] = ((x & mask) == mask) ? 1 : 0;
        rows.push_back(std::move(row));
    }
    MatrixGF g = MatrixGF::from_rows(f2, rows);
    LinearCode code = LinearCode::from_generator(g);
    const std::size_t d = std::size_t(1) << (m - r);
    code.claim_distance(d, d);
    return code;
}

LinearCode hamming_cyclic(std::uint32_t m) {
    auto ext = Field::make(2, m);
    Poly g = minimal_polynomial(ext, ext->generator());
    const std::size_t n = (std::size_t(1) << m) - 1;
    LinearCode code = cyclic_from_genpoly(g, n);
    code.claim_distance(3, 3);
    return code;
}

FamilyEntry certify(std::string name, LinearCode code, const Guards& g) {
    try {
        code.min_distance(g);
    } catch (const guard_exceeded&) {
        // keep the carried design-distance interval
    }
    FamilyEntry e{std::move(name), std::move(code)};
    e.transitive_certified = e.code.is_cyclic();
    e.self_orthogonal = e.code.is_self_orthogonal();
    e.self_dual = e.code.is_self_dual();
    return e;
}

}  // namespace

std::vector<FamilyEntry> family_generate(const FamilySpec& spec, const Guards& g) {
    if (spec.kind != FamilyKind::user_files && spec.index_lo > spec.index_hi)
        throw validation_error("family: empty index range");

    std::vector<FamilyEntry> out;
    switch (spec.kind) {
        case FamilyKind::bch: {
            auto f = spec.e == 1 ? Field::prime(spec.p) : Field::make(spec.p, spec.e);
            for (std::size_t n = spec.index_lo; n <= spec.index_hi; ++n) {
                auto code = bch_code(f, n, spec.bch_delta, g);
                if (!code) continue;
                out.push_back(certify(
                    "bch_n" + std::to_string(n) + "_d" + std::to_string(spec.bch_delta),
                    std::move(*code), g));
            }
            break;
        }
        case FamilyKind::reed_solomon: {
            auto f = spec.e == 1 ? Field::prime(spec.p) : Field::make(spec.p, spec.e);
            const std::size_t n =
                spec.rs_length ? spec.rs_length : static_cast<std::size_t>(f->order() - 1);
            for (std::size_t k = spec.index_lo; k <= spec.index_hi; ++k) {
                if (k < 1 || k >= n) continue;
                out.push_back(certify("rs_n" + std::to_string(n) + "_k" + std::to_string(k),
                                      rs_code(f, n, k), g));
            }
            break;
        }
        case FamilyKind::reed_muller: {
            if (spec.p != 2 || spec.e != 1)
                throw validation_error("family: reed_muller is binary only");
            for (std::size_t m = spec.index_lo; m <= spec.index_hi; ++m) {
                if (m < 1 || spec.rm_order > m) continue;
                out.push_back(certify("rm_r" + std::to_string(spec.rm_order) + "_m" +
                                          std::to_string(m),
                                      rm_code(spec.rm_order, static_cast<std::uint32_t>(m)), g));
            }
            break;
        }
        case FamilyKind::cyclic_catalog: {
            if (spec.p != 2 || spec.e != 1)
                throw validation_error("family: cyclic_catalog is binary only");
            for (std::size_t m = spec.index_lo; m <= spec.index_hi; ++m) {
                if (m < 2 || (std::uint64_t(1) << m) > g.max_field_order) continue;
                out.push_back(certify("hamming_n" + std::to_string((std::size_t(1) << m) - 1),
                                      hamming_cyclic(static_cast<std::uint32_t>(m)), g));
            }
            break;
        }
        case FamilyKind::user_files: {
            for (std::size_t i = 0; i < spec.user_codes.size(); ++i) {
                std::string name = i < spec.user_names.size() ? spec.user_names[i]
                                                              : "user_" + std::to_string(i);
                out.push_back(certify(std::move(name), spec.user_codes[i], g));
            }
            break;
        }
    }
    if (out.empty()) throw validation_error("family: no codes generated for this spec");
    return out;
}

PipelineOutcome apply_pipeline(const std::vector<FamilyEntry>& entries, const FamilySpec& spec,
                               const Guards& g) {
    if (spec.gamma0 < 1) throw validation_error("pipeline: gamma0 must be >= 1");
    PipelineOutcome out;
    for (std::size_t j = 0; j < entries.size(); ++j) {
        const FamilyEntry& e = entries[j];
        try {
            LinearCode c = e.code;
            std::vector<TransformRecord> recs;
            for (const ChainStep& step : spec.chain) {
                TransformRecord rec;
                if (step.kind == "expand") {
                    if (!c.field()->base())
                        throw validation_error("expand: code field is not an extension tower");
                    if (step.expand_m && *step.expand_m != c.field()->ext_degree())
                        throw validation_error("expand: extension degree mismatch");
                    c = expand_code(c, SubfieldEmbedding::over(c.field()), &rec);
                } else if (step.kind == "extend") {
                    c = extend_code(c, &rec);
                } else if (step.kind == "puncture") {
                    try {
                        c.min_distance(g);
                    } catch (const guard_exceeded&) {
                    }
                    if (c.distance_interval().lo < 2)
                        throw validation_error("puncture: need certified distance >= 2");
                    c = puncture_code(c, step.coord, &rec);
                } else if (step.kind == "sum") {
                    c = direct_sum(c, c, &rec);
                } else if (step.kind == "uv") {
                    c = u_u_plus_v(c, c, &rec);
                } else if (step.kind == "product") {
                    c = product_code(c, c, &rec);
                } else if (step.kind == "dual") {
                    c = c.dual();
                    rec.kind = "dual";
                    rec.n_out = c.length();
                    rec.k_out = c.dim();
                    rec.d_lo = 1;
                    rec.d_hi = c.length();
                } else {
                    throw validation_error("pipeline: unknown transform '" + step.kind + "'");
                }
                recs.push_back(std::move(rec));
            }
            if (c.dim() < 2 * spec.gamma0)
                throw validation_error("unit_memory: need k >= 2*gamma0");
            ConvCode v = unit_memory_from_block(c, spec.gamma0, g);
            out.rows.push_back(PipelineRow{j, e.name, std::move(c), std::move(recs), std::move(v),
                                           e.transitive_certified, e.self_orthogonal,
                                           e.self_dual});
        } catch (const validation_error& ex) {
            out.skipped.emplace_back(j, ex.what());
        }
    }
    return out;
}

FamilyReport family_report(const PipelineOutcome& out, const Guards& g) {
    if (out.rows.empty()) throw validation_error("report: no pipeline rows");
    FamilyReport rep;
    rep.skipped = out.skipped;
    for (const PipelineRow& pr : out.rows) {
        ReportRow r;
        r.j = pr.index;
        r.n = pr.conv.length();
        r.k = pr.conv.dim();
        r.gamma = pr.conv.degree();
        r.memory = pr.conv.memory();
        r.d_block_lo = pr.block.distance_interval().lo;
        r.d_block_hi = pr.block.distance_interval().hi;
        try {
            r.d_dual = pr.block.min_distance(g);
        } catch (const guard_exceeded&) {
            r.d_dual = 0;
        }
        r.df_lb = pr.conv.df_lower().value_or(0);
        try {
            r.df_exact = free_distance(pr.conv, g).distance;
        } catch (const guard_exceeded&) {
        } catch (const validation_error&) {
            // memory > 1 falls outside the exact search
        }
        r.s = pr.conv.singleton().s;
        r.r = pr.conv.singleton().r;
        r.rate = Rational::make(r.k, r.n);
        if (r.df_exact) {
            r.ratio = Rational::make(*r.df_exact, r.r);
        } else {
            r.ratio = Rational::make(r.df_lb, r.r);
            r.ratio_is_lower_bound = true;
        }
        std::string labels;
        auto tag = [&](bool on, const char* t) {
            if (!on) return;
            if (!labels.empty()) labels += '|';
            labels += t;
        };
        tag(pr.transitive_certified, "cyclic");
        tag(pr.self_orthogonal, "self_orthogonal");
        tag(pr.self_dual, "self_dual");
        r.labels = labels.empty() ? "-" : labels;
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

TrendDiagnostic goodness_trend(const FamilyReport& report, double rate_floor, double ratio_floor) {
    if (report.rows.empty()) throw validation_error("trend: empty report");
    if (!(rate_floor > 0.0 && rate_floor <= 1.0) || !(ratio_floor > 0.0 && ratio_floor <= 1.0))
        throw validation_error("trend: floors must lie in (0, 1]");
    TrendDiagnostic t;
    t.min_rate = report.rows[0].rate;
    t.min_ratio = report.rows[0].ratio;
    for (const ReportRow& r : report.rows) {
        if (r.rate < t.min_rate) t.min_rate = r.rate;
        if (r.ratio < t.min_ratio) t.min_ratio = r.ratio;
        t.ratio_includes_lower_bounds |= r.ratio_is_lower_bound;
    }
    t.rate_pass = t.min_rate.value() >= rate_floor;
    t.ratio_pass = t.min_ratio.value() >= ratio_floor;
    t.pass = t.rate_pass && t.ratio_pass;
    t.note = "finite-prefix evidence, not a limit statement";
    return t;
}

}  // namespace agcc
