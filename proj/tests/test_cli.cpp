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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "agcc/serialize.hpp"

using namespace agcc;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int rc = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    static const std::string bin = AGCC_BIN;
    fs::path tmp = fs::temp_directory_path() / "agcc_cli_out.txt";
    std::string cmd = "'" + bin + "' " + args + " > '" + tmp.string() + "' 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

fs::path work_dir() {
    fs::path d = fs::temp_directory_path() / "agcc_cli_work";
    fs::create_directories(d);
    return d;
}

std::string write_hamming() {
    auto f2 = Field::prime(2);
    LinearCode ham = LinearCode::from_generator(MatrixGF(f2, 4, 7,
                                                         {1, 1, 0, 1, 0, 0, 0,
                                                          0, 1, 1, 0, 1, 0, 0,
                                                          0, 0, 1, 1, 0, 1, 0,
                                                          0, 0, 0, 1, 1, 0, 1}));
    fs::path p = work_dir() / "hamming74.json";
    std::ofstream(p) << code_to_json(ham, "hamming74", 3).dump(2) << "\n";
    return p.string();
}

}  // namespace

TEST_CASE("code mindist") {
    std::string ham = write_hamming();
    auto r = run("code mindist --in '" + ham + "'");
    CHECK(r.rc == 0);
    CHECK(json::parse(r.out)["d"] == 3);
}

TEST_CASE("zero code and malformed input are validation errors") {
    fs::path p = work_dir() / "zero.json";
    json j;
    j["field"] = field_to_json(Field::prime(2));
    j["generator"] = json::array({json::array({0, 0, 0})});
    std::ofstream(p) << j.dump() << "\n";
    CHECK(run("code mindist --in '" + p.string() + "'").rc == 2);
    CHECK(run("code mindist --in /nonexistent.json").rc == 2);
    CHECK(run("code mindist --in '" + p.string() + "' --bogus-flag").rc == 2);
}

TEST_CASE("guard violations use a distinct exit code") {
    std::string ham = write_hamming();
    CHECK(run("--max-codewords 2 code mindist --in '" + ham + "'").rc == 3);
}

TEST_CASE("conv build emits the unit-memory parameter block") {
    std::string ham = write_hamming();
    auto r = run("conv build --gamma0 1 --in '" + ham + "'");
    REQUIRE(r.rc == 0);
    json p = json::parse(r.out)["params"];
    CHECK(p["n"] == 7);
    CHECK(p["k"] == 3);
    CHECK(p["gamma"] == 1);
    CHECK(p["memory"] == 1);
    CHECK(p["df_lb"] == 3);
    CHECK(p["s"] == 6);
    CHECK(p["r"] == 7);
    // byte-identical on rerun
    CHECK(run("conv build --gamma0 1 --in '" + ham + "'").out == r.out);
}

TEST_CASE("conv round trip through --out") {
    std::string ham = write_hamming();
    fs::path conv = work_dir() / "conv.json";
    REQUIRE(run("conv build --gamma0 1 --in '" + ham + "' --out '" + conv.string() + "'").rc == 0);

    auto chk = run("conv check --in '" + conv.string() + "'");
    CHECK(chk.rc == 0);
    CHECK(json::parse(chk.out)["ok"] == true);

    auto fd = run("conv freedist --in '" + conv.string() + "'");
    REQUIRE(fd.rc == 0);
    json dj = json::parse(fd.out);
    std::size_t df = dj["df"].get<std::size_t>();
    CHECK(df >= 3);
    CHECK(df <= 6);

    auto tr = run("conv freedist --in '" + conv.string() + "' --truncated " +
                  std::to_string(dj["witness_blocks"].get<std::size_t>()));
    REQUIRE(tr.rc == 0);
    CHECK(json::parse(tr.out)["df_truncated"] == df);

    auto bd = run("conv bound --in '" + conv.string() + "'");
    CHECK(json::parse(bd.out)["s"] == 6);
    CHECK(json::parse(bd.out)["r"] == 7);
}

TEST_CASE("code transform and info") {
    std::string ham = write_hamming();
    fs::path ext = work_dir() / "ext.json";
    auto tr = run("code transform --op extend --in '" + ham + "' --out '" + ext.string() + "'");
    REQUIRE(tr.rc == 0);
    json tj = json::parse(tr.out);
    CHECK(tj["meta"]["transform"]["kind"] == "extend");
    CHECK(tj["meta"]["transform"]["n_out"] == 8);

    auto info = run("code info --in '" + ext.string() + "'");
    REQUIRE(info.rc == 0);
    json ij = json::parse(info.out);
    CHECK(ij["n"] == 8);
    CHECK(ij["k"] == 4);
    CHECK(ij["d_lo"] == 4);
    CHECK(ij["self_dual"] == true);

    auto dual = run("code dual --in '" + ham + "'");
    REQUIRE(dual.rc == 0);
    json dj = json::parse(dual.out);
    CHECK(dj["generator"].size() == 3);
}

TEST_CASE("code check flags a wrong claim") {
    auto f2 = Field::prime(2);
    LinearCode ham = LinearCode::from_generator(MatrixGF(f2, 4, 7,
                                                         {1, 1, 0, 1, 0, 0, 0,
                                                          0, 1, 1, 0, 1, 0, 0,
                                                          0, 0, 1, 1, 0, 1, 0,
                                                          0, 0, 0, 1, 1, 0, 1}));
    fs::path p = work_dir() / "badclaim.json";
    std::ofstream(p) << code_to_json(ham, "hamming74", 4).dump() << "\n";
    auto r = run("code check --in '" + p.string() + "'");
    CHECK(r.rc == 2);
    CHECK(json::parse(r.out)["ok"] == false);

    std::string good = write_hamming();
    auto g = run("code check --in '" + good + "'");
    CHECK(g.rc == 0);
    CHECK(json::parse(g.out)["ok"] == true);
}

TEST_CASE("family report is deterministic") {
    fs::path spec = work_dir() / "catalog.json";
    json sj;
    sj["kind"] = "cyclic_catalog";
    sj["index_lo"] = 3;
    sj["index_hi"] = 4;
    sj["gamma0"] = 1;
    std::ofstream(spec) << sj.dump() << "\n";

    fs::path csv = work_dir() / "report.csv";
    auto r = run("--format csv family report --spec '" + spec.string() + "' --out '" +
                 csv.string() + "'");
    REQUIRE(r.rc == 0);
    CHECK(r.out.rfind("j,n,k,gamma,", 0) == 0);
    CHECK(r.out.find("\n0,7,3,1,1,") != std::string::npos);

    auto r2 = run("--format csv family report --spec '" + spec.string() + "'");
    CHECK(r2.out == r.out);

    std::ifstream in(csv);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == r.out);

    auto rj = run("family report --spec '" + spec.string() + "'");
    REQUIRE(rj.rc == 0);
    CHECK(json::parse(rj.out)["rows"].size() == 2);
}

TEST_CASE("selftest passes") {
    auto r = run("selftest");
    CHECK(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["failed"] == 0);
    CHECK(j["passed"].get<int>() >= 4);
}
