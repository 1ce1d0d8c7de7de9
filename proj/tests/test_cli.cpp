// Copyright 2026 The betaroc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks against the built binary; the path arrives via the
// BETAROC_CLI environment variable set by the test harness.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* env = std::getenv("BETAROC_CLI");
    REQUIRE_MESSAGE(env != nullptr, "BETAROC_CLI must point at the built binary");
    return env;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const fs::path out_path = fs::temp_directory_path() / "betaroc_cli_out.tmp";
    const std::string cmd = cli_path() + " " + args + " >" + out_path.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    fs::remove(out_path);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buf.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "betaroc_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path make_fixture_scores() {
    const fs::path p = scratch_dir() / "fixture.csv";
    if (!fs::exists(p)) {
        const RunResult r = run("synth --alpha1 1.47 --beta1 0.29 --alpha2 0.24 --beta2 17.5 "
                                "--n-clients 3000 --n-imposters 3000 --seed 11 -o " + p.string());
        REQUIRE(r.exit_code == 0);
    }
    return p;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("help and version exit cleanly") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("analyze --help").exit_code == 0);
    CHECK(run("--version").out.find("0.1.0") != std::string::npos);
}

TEST_CASE("synth output is parseable and seeded") {
    const RunResult a = run("synth --alpha1 2 --beta1 5 --alpha2 0.5 --beta2 3 "
                            "--n-clients 10 --n-imposters 10 --seed 3");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out.rfind("label,score\n", 0) == 0);
    const RunResult b = run("synth --alpha1 2 --beta1 5 --alpha2 0.5 --beta2 3 "
                            "--n-clients 10 --n-imposters 10 --seed 3");
    CHECK(a.out == b.out);
}

TEST_CASE("analyze produces a valid report and exit code 0") {
    const fs::path scores = make_fixture_scores();
    const RunResult r = run("analyze -i " + scores.string() + " --thresholds 0.1,0.5");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["client"]["shape_coarse"] == "j_family");
    CHECK(j["imposter"]["shape_fine"] == "j");
    CHECK(j["extremal"]["above_diagonal_near_0"] == true);
    CHECK(j["extremal"]["above_diagonal_near_1"] == true);
    CHECK(j["metrics"]["thresholds"].size() == 2);
}

TEST_CASE("analyze is byte-deterministic across runs") {
    const fs::path scores = make_fixture_scores();
    const fs::path out1 = scratch_dir() / "r1.json";
    const fs::path out2 = scratch_dir() / "r2.json";
    CHECK(run("analyze -i " + scores.string() + " -o " + out1.string()).exit_code == 0);
    CHECK(run("analyze -i " + scores.string() + " -o " + out2.string()).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(!slurp(out1).empty());
}

TEST_CASE("exit codes distinguish input and fit failures") {
    CHECK(run("analyze -i /nonexistent/scores.csv").exit_code == 1);

    const fs::path all_equal = scratch_dir() / "equal.csv";
    std::ofstream f(all_equal);
    f << "label,score\n";
    for (int i = 0; i < 5; ++i) f << "client,0.5\nimposter,0.5\n";
    f.close();
    CHECK(run("analyze -i " + all_equal.string()).exit_code == 2);

    const fs::path bad = scratch_dir() / "bad.csv";
    std::ofstream g(bad);
    g << "label,score\nclient,1.5\n";
    g.close();
    CHECK(run("analyze -i " + bad.string()).exit_code == 1);
}

TEST_CASE("fit emits compact per-class estimates") {
    const fs::path scores = make_fixture_scores();
    const RunResult r = run("fit -i " + scores.string());
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["client"]["converged"] == true);
    CHECK(j["imposter"]["alpha"].get<double>() < 1.0);
}

TEST_CASE("roc emits monotone CSV curves") {
    const fs::path scores = make_fixture_scores();
    const RunResult r = run("roc -i " + scores.string() + " --kind both --grid 51");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("kind,fpr,tpr\n", 0) == 0);
    CHECK(r.out.find("empirical,") != std::string::npos);
    CHECK(r.out.find("theoretical,") != std::string::npos);
    CHECK(run("roc -i " + scores.string() + " --kind sideways").exit_code == 1);
}

TEST_CASE("metrics prints one row per threshold") {
    const fs::path scores = make_fixture_scores();
    const RunResult r = run("metrics -i " + scores.string() + " --thresholds 0.1,0.5,0.9");
    REQUIRE(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 4); // header + 3 rows
    CHECK(r.out.rfind("threshold,tp,fp,tn,fn,tpr,ppv,f1\n", 0) == 0);
}

TEST_CASE("sweep grid semantics and determinism") {
    const RunResult r = run("sweep --alpha1 0.5,1.5 --beta1 0.5,1.5 "
                            "--alpha2 0.5,1.5 --beta2 0.5,1.5");
    REQUIRE(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 17); // header + 16 cells

    const RunResult range = run("sweep --alpha1 0.1:1.0:0.1 --beta1 1 --alpha2 1 --beta2 1");
    int range_lines = 0;
    for (char c : range.out) range_lines += c == '\n';
    CHECK(range_lines == 11); // header + 10 axis values

    const RunResult again = run("sweep --alpha1 0.5,1.5 --beta1 0.5,1.5 "
                                "--alpha2 0.5,1.5 --beta2 0.5,1.5");
    CHECK(again.out == r.out);

    CHECK(run("sweep --alpha1 nope --beta1 1 --alpha2 1 --beta2 1").exit_code == 1);
}

TEST_CASE("plot writes well-formed SVG files") {
    const fs::path scores = make_fixture_scores();
    const fs::path roc_svg = scratch_dir() / "roc.svg";
    CHECK(run("plot -i " + scores.string() + " --kind roc -o " + roc_svg.string()).exit_code == 0);
    const std::string svg = slurp(roc_svg);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);

    const fs::path dens = scratch_dir() / "dens.svg";
    CHECK(run("plot -i " + scores.string() + " --kind density -o " + dens.string()).exit_code ==
          0);
    CHECK(fs::exists(scratch_dir() / "dens_client.svg"));
    CHECK(fs::exists(scratch_dir() / "dens_imposter.svg"));

    CHECK(run("plot -i " + scores.string() + " --kind mystery").exit_code == 1);

    // Re-plot the theoretical curve from a saved report.
    const fs::path report = scratch_dir() / "report.json";
    CHECK(run("analyze -i " + scores.string() + " -o " + report.string()).exit_code == 0);
    const fs::path from_report = scratch_dir() / "roc_report.svg";
    CHECK(run("plot --kind roc --report " + report.string() + " -o " +
              from_report.string()).exit_code == 0);
    CHECK(slurp(from_report).find("</svg>") != std::string::npos);
}

} // TEST_SUITE
