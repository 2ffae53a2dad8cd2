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

#include "agcc/serialize.hpp"

#include <sstream>

namespace agcc {

namespace {

bool is_uint(const json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

std::uint64_t get_uint(const json& j, const char* key) {
    if (!j.contains(key) || !is_uint(j[key]))
        throw validation_error(std::string("json: missing or bad field '") + key + "'");
    return j[key].get<std::uint64_t>();
}

MatrixGF matrix_from_json(const FieldPtr& f, const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw validation_error(std::string("json: ") + what + " must be a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw validation_error(std::string("json: ") + what + " has an empty row");
    MatrixGF m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw validation_error(std::string("json: ") + what + " rows have uneven lengths");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!is_uint(j[i][c]))
                throw validation_error(std::string("json: ") + what + " entries must be integers");
            Elem e = j[i][c].get<Elem>();
            f->check(e);
            m.at(i, c) = e;
        }
    }
    return m;
}

json matrix_to_json(const MatrixGF& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json field_to_json(const FieldPtr& f) {
    json j;
    j["p"] = f->characteristic();
    j["e"] = f->ext_degree();
    j["modulus"] = f->modulus();
    if (f->base() && f->base()->ext_degree() > 1) j["base"] = field_to_json(f->base());
    return j;
}

FieldPtr field_from_json(const json& j) {
    if (!j.is_object()) throw validation_error("json: field must be an object");
    const auto p = static_cast<std::uint32_t>(get_uint(j, "p"));
    const auto e = static_cast<std::uint32_t>(get_uint(j, "e"));
    std::optional<std::vector<Elem>> modulus;
    if (j.contains("modulus") && !j["modulus"].empty())
        modulus = j["modulus"].get<std::vector<Elem>>();
    if (j.contains("base")) {
        FieldPtr base = field_from_json(j["base"]);
        if (base->characteristic() != p)
            throw validation_error("json: base field characteristic mismatch");
        return Field::extension(base, e, modulus);
    }
    if (e == 1) return Field::prime(p);
    return Field::make(p, e, modulus);
}

json code_to_json(const LinearCode& c, const std::string& name,
                  std::optional<std::size_t> claimed_d) {
    json j;
    j["field"] = field_to_json(c.field());
    j["generator"] = matrix_to_json(c.generator());
    json meta;
    meta["name"] = name;
    if (claimed_d) meta["claimed_d"] = *claimed_d;
    j["meta"] = std::move(meta);
    return j;
}

LinearCode code_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("generator"))
        throw validation_error("json: code needs 'field' and 'generator'");
    FieldPtr f = field_from_json(j["field"]);
    LinearCode c = LinearCode::from_generator(matrix_from_json(f, j["generator"], "generator"));
    if (j.contains("meta") && j["meta"].contains("claimed_d")) {
        std::size_t d = get_uint(j["meta"], "claimed_d");
        c.claim_distance(d, d);
    }
    return c;
}

std::string code_name_from_json(const json& j) {
    if (j.contains("meta") && j["meta"].contains("name") && j["meta"]["name"].is_string())
        return j["meta"]["name"].get<std::string>();
    return "";
}

json conv_to_json(const ConvCode& v) {
    json j;
    j["field"] = field_to_json(v.generator().field());
    json coeffs = json::array();
    for (const MatrixGF& a : v.generator().coeffs()) coeffs.push_back(matrix_to_json(a));
    j["coeffs"] = std::move(coeffs);
    json p;
    p["n"] = v.length();
    p["k"] = v.dim();
    p["gamma"] = v.degree();
    p["memory"] = v.memory();
    p["df_lb"] = v.df_lower() ? json(*v.df_lower()) : json(nullptr);
    p["df"] = v.df_exact() ? json(*v.df_exact()) : json(nullptr);
    p["s"] = v.singleton().s;
    p["r"] = v.singleton().r;
    j["params"] = std::move(p);
    return j;
}

ConvCode conv_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("coeffs"))
        throw validation_error("json: conv code needs 'field' and 'coeffs'");
    FieldPtr f = field_from_json(j["field"]);
    if (!j["coeffs"].is_array() || j["coeffs"].empty())
        throw validation_error("json: conv 'coeffs' must be a nonempty array");
    std::vector<MatrixGF> coeffs;
    for (const auto& a : j["coeffs"]) coeffs.push_back(matrix_from_json(f, a, "coefficient"));

    std::optional<std::size_t> df_lb, df;
    if (j.contains("params")) {
        const json& p = j["params"];
        if (p.contains("df_lb") && is_uint(p["df_lb"])) df_lb = p["df_lb"].get<std::size_t>();
        if (p.contains("df") && is_uint(p["df"])) df = p["df"].get<std::size_t>();
    }
    ConvCode v = ConvCode::from_generator(PolyMatrix(std::move(coeffs)), df_lb);
    if (j.contains("params")) {
        const json& p = j["params"];
        auto mismatch = [&](const char* key, std::size_t actual) {
            return p.contains(key) && get_uint(p, key) != actual;
        };
        if (mismatch("n", v.length()) || mismatch("k", v.dim()) ||
            mismatch("gamma", v.degree()) || mismatch("memory", v.memory()) ||
            mismatch("s", v.singleton().s) || mismatch("r", v.singleton().r))
            throw validation_error("json: conv parameter block contradicts the generator");
    }
    if (df) v.set_df_exact(*df);
    return v;
}

json transform_record_to_json(const TransformRecord& r) {
    json j;
    j["kind"] = r.kind;
    j["n_out"] = r.n_out;
    j["k_out"] = r.k_out;
    j["d_lo"] = r.d_lo;
    j["d_hi"] = r.d_hi;
    if (r.coord) j["coord"] = *r.coord;
    if (r.expand_m) j["expand_m"] = *r.expand_m;
    return j;
}

std::string report_to_csv(const FamilyReport& rep) {
    std::ostringstream out;
    out << "j,n,k,gamma,memory,d_block_lo,d_block_hi,d_dual,df_lb,df_exact,s,r,"
           "rate_num,rate_den,ratio_num,ratio_den,labels\n";
    for (const ReportRow& r : rep.rows) {
        out << r.j << ',' << r.n << ',' << r.k << ',' << r.gamma << ',' << r.memory << ','
            << r.d_block_lo << ',' << r.d_block_hi << ',' << r.d_dual << ',' << r.df_lb << ',';
        if (r.df_exact) out << *r.df_exact;
        out << ',' << r.s << ',' << r.r << ',' << r.rate.num << ',' << r.rate.den << ','
            << r.ratio.num << ',' << r.ratio.den << ',' << r.labels << '\n';
    }
    return out.str();
}

json report_to_json(const FamilyReport& rep) {
    json rows = json::array();
    for (const ReportRow& r : rep.rows) {
        json row;
        row["j"] = r.j;
        row["n"] = r.n;
        row["k"] = r.k;
        row["gamma"] = r.gamma;
        row["memory"] = r.memory;
        row["d_block_lo"] = r.d_block_lo;
        row["d_block_hi"] = r.d_block_hi;
        row["d_dual"] = r.d_dual;
        row["df_lb"] = r.df_lb;
        row["df_exact"] = r.df_exact ? json(*r.df_exact) : json(nullptr);
        row["s"] = r.s;
        row["r"] = r.r;
        row["rate_num"] = r.rate.num;
        row["rate_den"] = r.rate.den;
        row["ratio_num"] = r.ratio.num;
        row["ratio_den"] = r.ratio.den;
        row["ratio_is_lower_bound"] = r.ratio_is_lower_bound;
        row["labels"] = r.labels;
        rows.push_back(std::move(row));
    }
    json j;
    j["rows"] = std::move(rows);
    json skipped = json::array();
    for (const auto& [idx, reason] : rep.skipped) {
        json s;
        s["index"] = idx;
        s["reason"] = reason;
        skipped.push_back(std::move(s));
    }
    j["skipped"] = std::move(skipped);
    return j;
}

ParsedFamilySpec family_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw validation_error("json: family spec needs 'kind'");
    ParsedFamilySpec out;
    FamilySpec& s = out.spec;
    s.kind = family_kind_from_string(j["kind"].get<std::string>());
    if (j.contains("p")) s.p = static_cast<std::uint32_t>(get_uint(j, "p"));
    if (j.contains("e")) s.e = static_cast<std::uint32_t>(get_uint(j, "e"));
    if (j.contains("index_lo")) s.index_lo = get_uint(j, "index_lo");
    if (j.contains("index_hi")) s.index_hi = get_uint(j, "index_hi");
    if (j.contains("delta")) s.bch_delta = get_uint(j, "delta");
    if (j.contains("rs_length")) s.rs_length = get_uint(j, "rs_length");
    if (j.contains("rm_order")) s.rm_order = static_cast<std::uint32_t>(get_uint(j, "rm_order"));
    if (j.contains("gamma0")) s.gamma0 = get_uint(j, "gamma0");
    if (j.contains("chain")) {
        if (!j["chain"].is_array()) throw validation_error("json: 'chain' must be an array");
        for (const auto& st : j["chain"]) {
            ChainStep step;
            if (st.is_string()) {
                step.kind = st.get<std::string>();
            } else if (st.is_object() && st.contains("kind")) {
                step.kind = st["kind"].get<std::string>();
                if (st.contains("coord")) step.coord = get_uint(st, "coord");
                if (st.contains("expand_m"))
                    step.expand_m = static_cast<std::uint32_t>(get_uint(st, "expand_m"));
            } else {
                throw validation_error("json: chain steps must be strings or objects");
            }
            s.chain.push_back(std::move(step));
        }
    }
    if (j.contains("user_files")) {
        if (!j["user_files"].is_array())
            throw validation_error("json: 'user_files' must be an array of paths");
        for (const auto& p : j["user_files"]) out.user_files.push_back(p.get<std::string>());
    }
    return out;
}

}  // namespace agcc
