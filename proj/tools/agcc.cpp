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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "agcc/serialize.hpp"

using namespace agcc;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitGuard = 3;

void emit_error(const char* type, const std::string& message);

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write '" + path + "'");
    out << text;
}

void emit(const json& j, const std::string& format) {
    if (format == "table") {
        for (const auto& [key, val] : j.items())
            std::cout << key << "  " << (val.is_string() ? val.get<std::string>() : val.dump())
                      << '\n';
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

struct Options {
    std::string in, in2, out, spec, format = "json";
    std::string op;
    std::size_t gamma0 = 1;
    std::size_t coord = 0;
    std::size_t truncated = 0;
    double rate_floor = 0.0, ratio_floor = 0.0;
    Guards guards = Guards::from_env();
};

json code_summary(const LinearCode& c, const Guards& g) {
    json j;
    j["n"] = c.length();
    j["k"] = c.dim();
    try {
        c.min_distance(g);
    } catch (const guard_exceeded&) {
    }
    j["d_lo"] = c.distance_interval().lo;
    j["d_hi"] = c.distance_interval().hi;
    j["d_exact"] = c.distance_interval().exact();
    j["cyclic"] = c.is_cyclic();
    j["self_orthogonal"] = c.is_self_orthogonal();
    j["self_dual"] = c.is_self_dual();
    return j;
}

int cmd_code_info(const Options& o) {
    json in = read_json_file(o.in);
    LinearCode c = code_from_json(in);
    json j = code_summary(c, o.guards);
    std::string name = code_name_from_json(in);
    if (!name.empty()) j["name"] = name;
    emit(j, o.format);
    return 0;
}

int cmd_code_dual(const Options& o) {
    json in = read_json_file(o.in);
    LinearCode d = code_from_json(in).dual();
    std::string name = code_name_from_json(in);
    json out = code_to_json(d, name.empty() ? "" : name + "_dual");
    if (!o.out.empty()) write_text_file(o.out, out.dump(2) + "\n");
    emit(out, "json");
    return 0;
}

int cmd_code_mindist(const Options& o) {
    json in = read_json_file(o.in);
    if (in.contains("meta")) in["meta"].erase("claimed_d");  // always brute force
    LinearCode c = code_from_json(in);
    json j;
    j["d"] = c.min_distance(o.guards);
    emit(j, o.format);
    return 0;
}

int cmd_code_check(const Options& o) {
    json in = read_json_file(o.in);
    std::optional<std::size_t> claimed;
    if (in.contains("meta") && in["meta"].contains("claimed_d")) {
        claimed = in["meta"]["claimed_d"].get<std::size_t>();
        in["meta"].erase("claimed_d");  // recompute honestly, then compare
    }
    LinearCode c = code_from_json(in);
    json j = code_summary(c, o.guards);
    j["claimed_d"] = claimed ? json(*claimed) : json(nullptr);
    bool ok = true;
    if (claimed) {
        const DistInterval& di = c.distance_interval();
        ok = di.exact() ? di.lo == *claimed : (di.lo <= *claimed && *claimed <= di.hi);
    }
    j["ok"] = ok;
    emit(j, o.format);
    if (!ok) {
        emit_error("validation", "claimed distance is inconsistent with the computed distance");
        return kExitValidation;
    }
    return 0;
}

int cmd_code_transform(const Options& o) {
    json in = read_json_file(o.in);
    LinearCode a = code_from_json(in);
    TransformRecord rec;
    LinearCode out = [&] {
        if (o.op == "expand") {
            if (!a.field()->base())
                throw validation_error("expand: code field is not an extension tower");
            return expand_code(a, SubfieldEmbedding::over(a.field()), &rec);
        }
        if (o.op == "extend") return extend_code(a, &rec);
        if (o.op == "puncture")
            return puncture_code(a, o.coord ? std::optional<std::size_t>(o.coord) : std::nullopt,
                                 &rec);
        LinearCode b = o.in2.empty() ? a : code_from_json(read_json_file(o.in2));
        if (o.op == "sum") return direct_sum(a, b, &rec);
        if (o.op == "uv") return u_u_plus_v(a, b, &rec);
        if (o.op == "product") return product_code(a, b, &rec);
        throw validation_error("unknown transform '" + o.op + "'");
    }();
    std::string name = code_name_from_json(in);
    json jout = code_to_json(out, name.empty() ? o.op : name + "_" + o.op);
    jout["meta"]["transform"] = transform_record_to_json(rec);
    if (!o.out.empty()) write_text_file(o.out, jout.dump(2) + "\n");
    emit(jout, "json");
    return 0;
}

int cmd_conv_build(const Options& o) {
    LinearCode c = code_from_json(read_json_file(o.in));
    ConvCode v = unit_memory_from_block(c, o.gamma0, o.guards);
    json j = conv_to_json(v);
    if (!o.out.empty()) write_text_file(o.out, j.dump(2) + "\n");
    emit(j, "json");
    return 0;
}

int cmd_conv_check(const Options& o) {
    ConvCode v = conv_from_json(read_json_file(o.in));  // re-certifies
    json j = conv_to_json(v)["params"];
    j["basic"] = true;
    j["reduced"] = true;
    j["ok"] = true;
    emit(j, o.format);
    return 0;
}

int cmd_conv_freedist(const Options& o) {
    ConvCode v = conv_from_json(read_json_file(o.in));
    json j;
    if (o.truncated > 0) {
        j["df_truncated"] = free_distance_truncated(v, o.truncated, o.guards);
        j["horizon"] = o.truncated;
    } else {
        FreeDistResult r = free_distance(v, o.guards);
        j["df"] = r.distance;
        j["witness_blocks"] = r.witness_blocks;
    }
    emit(j, o.format);
    return 0;
}

int cmd_conv_bound(const Options& o) {
    ConvCode v = conv_from_json(read_json_file(o.in));
    json j;
    j["s"] = v.singleton().s;
    j["r"] = v.singleton().r;
    emit(j, o.format);
    return 0;
}

int cmd_family_report(const Options& o) {
    auto parsed = family_spec_from_json(read_json_file(o.spec));
    for (const std::string& path : parsed.user_files) {
        json cj = read_json_file(path);
        parsed.spec.user_codes.push_back(code_from_json(cj));
        std::string name = code_name_from_json(cj);
        parsed.spec.user_names.push_back(name.empty() ? path : name);
    }
    auto fam = family_generate(parsed.spec, o.guards);
    auto rep = family_report(apply_pipeline(fam, parsed.spec, o.guards), o.guards);

    std::string text =
        o.format == "json" ? report_to_json(rep).dump(2) + "\n" : report_to_csv(rep);
    if (!o.out.empty()) write_text_file(o.out, text);
    std::cout << text;

    if (o.rate_floor > 0.0 && o.ratio_floor > 0.0) {
        auto t = goodness_trend(rep, o.rate_floor, o.ratio_floor);
        json tj;
        tj["pass"] = t.pass;
        tj["min_rate"] = std::to_string(t.min_rate.num) + "/" + std::to_string(t.min_rate.den);
        tj["min_ratio"] = std::to_string(t.min_ratio.num) + "/" + std::to_string(t.min_ratio.den);
        tj["note"] = t.note;
        std::cerr << tj.dump(2) << '\n';
    }
    return 0;
}

bool selftest_block() {
    auto f2 = Field::prime(2);
    LinearCode ham = LinearCode::from_generator(MatrixGF(f2, 4, 7,
                                                         {1, 1, 0, 1, 0, 0, 0,
                                                          0, 1, 1, 0, 1, 0, 0,
                                                          0, 0, 1, 1, 0, 1, 0,
                                                          0, 0, 0, 1, 1, 0, 1}));
    if (ham.min_distance() != 3) return false;
    if (ham.dual().min_distance() != 4) return false;
    LinearCode ext = extend_code(ham);
    return ext.min_distance() == 4 && ext.is_self_dual();
}

bool selftest_field() {
    auto f4 = Field::make(2, 2);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) {
            if (f4->add(a, b) != f4->add(b, a)) return false;
            if (f4->mul(a, b) != f4->mul(b, a)) return false;
            if (b != 0 && f4->mul(f4->div(a, b), b) != a) return false;
        }
    return f4->pow(f4->generator(), 3) == 1;
}

bool selftest_conv() {
    auto f2 = Field::prime(2);
    PolyMatrix g({MatrixGF(f2, 1, 2, {1, 1}), MatrixGF(f2, 1, 2, {1, 0})});
    ConvCode v = ConvCode::from_generator(g);
    FreeDistResult r = free_distance(v);
    if (r.distance != 3) return false;
    if (free_distance_truncated(v, r.witness_blocks) != 3) return false;
    PolyMatrix bad({MatrixGF(f2, 1, 2, {1, 1}), MatrixGF(f2, 1, 2, {1, 1})});
    return !bad.is_basic();
}

bool selftest_pipeline() {
    auto f2 = Field::prime(2);
    LinearCode ham = LinearCode::from_generator(MatrixGF(f2, 4, 7,
                                                         {1, 1, 0, 1, 0, 0, 0,
                                                          0, 1, 1, 0, 1, 0, 0,
                                                          0, 0, 1, 1, 0, 1, 0,
                                                          0, 0, 0, 1, 1, 0, 1}));
    ConvCode v = unit_memory_from_block(ham, 1);
    if (v.singleton().s != 6 || v.singleton().r != 7) return false;
    std::size_t df = free_distance(v).distance;
    return 3 <= df && df <= 6;
}

int cmd_selftest(const Options& o) {
    struct Check {
        const char* name;
        bool (*fn)();
    };
    const Check checks[] = {
        {"field_arithmetic", selftest_field},
        {"block_codes", selftest_block},
        {"convolutional", selftest_conv},
        {"pipeline", selftest_pipeline},
    };
    json results = json::array();
    int passed = 0, failed = 0;
    for (const Check& c : checks) {
        bool ok = false;
        try {
            ok = c.fn();
        } catch (...) {
        }
        (ok ? passed : failed)++;
        json r;
        r["name"] = c.name;
        r["ok"] = ok;
        results.push_back(std::move(r));
    }
    json j;
    j["passed"] = passed;
    j["failed"] = failed;
    j["checks"] = std::move(results);
    emit(j, o.format);
    return failed == 0 ? 0 : 1;
}

void emit_error(const char* type, const std::string& message) {
    json j;
    j["error"]["type"] = type;
    j["error"]["message"] = message;
    std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"exact toolkit for block and unit-memory convolutional codes"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--max-codewords", o.guards.max_codewords, "codeword enumeration guard");
    app.add_option("--max-states", o.guards.max_states, "state graph guard");
    app.add_option("--max-cosets", o.guards.max_cosets, "per-edge enumeration guard");
    app.add_option("--max-trunc", o.guards.max_trunc_space, "truncated search guard");

    int rc = 0;
    auto bind = [&](CLI::App* cmd, int (*fn)(const Options&)) {
        cmd->callback([&o, fn, &rc] { rc = fn(o); });
    };

    CLI::App* code = app.add_subcommand("code", "block code operations");
    code->require_subcommand(1);
    auto add_in = [&](CLI::App* c) { c->add_option("--in", o.in, "input code JSON")->required(); };
    CLI::App* info = code->add_subcommand("info", "parameters and certifications");
    add_in(info);
    bind(info, cmd_code_info);
    CLI::App* dual = code->add_subcommand("dual", "dual code");
    add_in(dual);
    dual->add_option("--out", o.out, "output file");
    bind(dual, cmd_code_dual);
    CLI::App* mindist = code->add_subcommand("mindist", "exact minimum distance");
    add_in(mindist);
    bind(mindist, cmd_code_mindist);
    CLI::App* check = code->add_subcommand("check", "verify the claimed distance");
    add_in(check);
    bind(check, cmd_code_check);
    CLI::App* transform = code->add_subcommand("transform", "apply a code transform");
    add_in(transform);
    transform->add_option("--op", o.op, "expand|extend|puncture|sum|uv|product")->required();
    transform->add_option("--coord", o.coord, "puncture coordinate (1-based)");
    transform->add_option("--in2", o.in2, "second operand code JSON");
    transform->add_option("--out", o.out, "output file");
    bind(transform, cmd_code_transform);

    CLI::App* conv = app.add_subcommand("conv", "convolutional code operations");
    conv->require_subcommand(1);
    CLI::App* build = conv->add_subcommand("build", "unit-memory construction from a block code");
    build->add_option("--in", o.in, "input code JSON")->required();
    build->add_option("--gamma0", o.gamma0, "degree parameter")->required();
    build->add_option("--out", o.out, "output file");
    bind(build, cmd_conv_build);
    CLI::App* vcheck = conv->add_subcommand("check", "certify basic and reduced");
    vcheck->add_option("--in", o.in, "input conv JSON")->required();
    bind(vcheck, cmd_conv_check);
    CLI::App* freedist = conv->add_subcommand("freedist", "exact free distance");
    freedist->add_option("--in", o.in, "input conv JSON")->required();
    freedist->add_option("--truncated", o.truncated, "horizon for the enumeration oracle");
    bind(freedist, cmd_conv_freedist);
    CLI::App* bound = conv->add_subcommand("bound", "degree-aware Singleton bound");
    bound->add_option("--in", o.in, "input conv JSON")->required();
    bind(bound, cmd_conv_bound);

    CLI::App* family = app.add_subcommand("family", "code family reports");
    family->require_subcommand(1);
    CLI::App* report = family->add_subcommand("report", "generate the metric table");
    report->add_option("--spec", o.spec, "family spec JSON")->required();
    report->add_option("--out", o.out, "output file");
    report->add_option("--rate-floor", o.rate_floor, "goodness diagnostic rate floor");
    report->add_option("--ratio-floor", o.ratio_floor, "goodness diagnostic ratio floor");
    bind(report, cmd_family_report);

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in invariant checks");
    bind(selftest, cmd_selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        emit_error("usage", e.what());
        return kExitValidation;
    } catch (const guard_exceeded& e) {
        emit_error("guard", e.what());
        return kExitGuard;
    } catch (const validation_error& e) {
        emit_error("validation", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
    return rc;
}
