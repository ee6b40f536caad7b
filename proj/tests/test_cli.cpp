#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct run_result {
    int exit_code = -1;
    std::string output;
};

std::string sod_bin() {
    const char* bin = std::getenv("SOD_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "SOD_BIN must point at the sod binary");
    return bin;
}

run_result run(const std::string& args) {
    run_result r;
    std::string cmd = sod_bin() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("invariants command") {
    run_result r = run("--format json invariants --family augmented --genus 4");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.output);
    CHECK(j["lattice"]["gram"][0] == nlohmann::ordered_json::array({1, -3, 1}));
    CHECK(j["serre"]["char_poly"] == "t^3 - 2t^2 + 2t - 1");
    CHECK(j["hh_homology"]["1"] == 4);
    CHECK(j["hh_cohomology"]["-2"] == 9);
}

TEST_CASE("check command reflects the predicate in the exit code") {
    run_result good = run("check exceptional --family ipg --g1 2 --g2 3 --class 0,1,0,-1");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("chi(v, v) = 1") != std::string::npos);
    run_result bad = run("check exceptional --family ipg --g1 2 --g2 3 --class 0,1,0,0");
    CHECK(bad.exit_code == 1);
    run_result spherical =
        run("check spherical --family augmented --genus 3 --class 2,-1,-2");
    CHECK(spherical.exit_code == 0);
}

TEST_CASE("isometry command") {
    run_result r = run("--format json isometry --left rpg:1,2 --right augmented:3 --bound 10");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.output);
    CHECK(j["result"] == "found");
    run_result refuted = run("--format json isometry --left augmented:2 --right augmented:3");
    CHECK(refuted.exit_code == 1);
    auto jr = nlohmann::ordered_json::parse(refuted.output);
    CHECK(jr["invariant"] == "serre_char_poly");
}

TEST_CASE("lattice JSON output round-trips through the isometry command") {
    run_result dump = run("--format json lattice --family augmented:3");
    REQUIRE(dump.exit_code == 0);
    std::string path = "/tmp/sod_test_lattice.json";
    {
        std::ofstream out(path);
        out << dump.output;
    }
    run_result same = run("isometry --left @" + path + " --right augmented:3");
    CHECK(same.exit_code == 0);
    CHECK(same.output.find("found") != std::string::npos);

    /* perturb one Gram entry so the determinant changes: refuted, exit 1 */
    auto j = nlohmann::ordered_json::parse(dump.output);
    j["gram"][0][0] = 2;
    {
        std::ofstream out(path);
        out << j.dump();
    }
    run_result differ = run("isometry --left @" + path + " --right augmented:3");
    CHECK(differ.exit_code == 1);
    CHECK(differ.output.find("refuted by invariant: det") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("classify-bn and bnp output") {
    run_result r = run("--format json classify-bn --genus 9");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.output);
    CHECK(j["entries"].size() == 3);
    CHECK(j["entries"][1]["curve_equivalent"] == false);
    run_result b = run("--format json bnp --genus 9");
    auto jb = nlohmann::ordered_json::parse(b.output);
    CHECK(jb["entries"][1]["count"] == "42");
}

TEST_CASE("byte-identical output on identical invocations") {
    std::string cmd = "--format json invariants --family rpg --g1 2 --g2 2";
    CHECK(run(cmd).output == run(cmd).output);
    std::string v = "verify-all --filter A09";
    CHECK(run(v).output == run(v).output);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("invariants --family augmented --genus -3").exit_code == 2);
    CHECK(run("invariants --family augmented").exit_code == 2);
    CHECK(run("check exceptional --family augmented --genus 2 --class 1,2").exit_code == 2);
    CHECK(run("classify-bn --genus 0").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("verify-all --filter no-such-item").exit_code == 2);
}

TEST_CASE("filtered verification run") {
    run_result r = run("verify-all --filter A01");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS A01") != std::string::npos);
    CHECK(r.output.find("A02") == std::string::npos);
}
