#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(REEBFORGE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(REEBFORGE_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("check passes a clean fixture") {
    RunResult r = run("check " + fixture("path.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"admissible\": true") != std::string::npos);
    CHECK(r.out.find("\"has_good_function\": true") != std::string::npos);
}

TEST_CASE("check flags the loop fixture with exit 1") {
    RunResult r = run("check " + fixture("loop.graph"));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("no good function: loop present") != std::string::npos);
}

TEST_CASE("verify passes the path fixture") {
    RunResult r = run("verify " + fixture("path.graph"));
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["property1"] == true);
    CHECK(j["property2"] == true);
    CHECK(j["property3"] == true);
    CHECK(j["chi_zero"] == true);
}

TEST_CASE("verify rejects the loop fixture with a LoopPresent diagnostic") {
    RunResult r = run("verify " + fixture("loop.graph"));
    CHECK(r.exit_code == 2);
}

TEST_CASE("realize emits a plan with the pinned top-level fields") {
    RunResult r = run("realize " + fixture("star.graph"));
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("graph"));
    CHECK(j.contains("good_function"));
    CHECK(j.contains("events"));
    CHECK(j.contains("cylinders"));
    CHECK(j.contains("invariants"));
    CHECK(j["invariants"]["global_chi"] == 0);
    CHECK(j["events"].size() == 4);
}

TEST_CASE("realize output is byte-identical across runs") {
    RunResult a = run("realize " + fixture("path.graph"));
    RunResult b = run("realize " + fixture("path.graph"));
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("random is seed-deterministic") {
    RunResult a = run("random --seed 7");
    RunResult b = run("random --seed 7");
    RunResult c = run("random --seed 8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(a.out.find("vertex v0") != std::string::npos);
}

TEST_CASE("random respects forced bounds") {
    RunResult r = run("random --seed 3 --max-vertices 2 --max-edges 1 --max-genus 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "vertex v0\nvertex v1\nedge v0 v1 genus=0\n");
}

TEST_CASE("verify --batch reports one line per unit plus a summary") {
    RunResult r = run("verify --batch 5 --seed 11 --max-vertices 6 --max-edges 8 --max-genus 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("{\"total\":5,\"passed\":5}") != std::string::npos);
    RunResult again =
        run("verify --batch 5 --seed 11 --max-vertices 6 --max-edges 8 --max-genus 2");
    CHECK(r.out == again.out);
}

TEST_CASE("export-dot emits DOT") {
    RunResult r = run("export-dot " + fixture("path.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graph G {") != std::string::npos);
    CHECK(r.out.find("\"a\" -- \"b\"") != std::string::npos);
}

TEST_CASE("sweep-off computes the torus cycle") {
    RunResult r = run("sweep-off " + fixture("torus.off"));
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["vertices"].size() == 4);
    CHECK(j["edges"].size() == 4);
}

TEST_CASE("sweep-off dot format") {
    RunResult r = run("sweep-off " + fixture("octahedron.off") + " --format dot");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graph reeb {") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("sweep-off " + fixture("octahedron.off") + " --format yaml").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("verify /nonexistent/file.graph").exit_code == 2);
}
