#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mesh_fixtures.hpp"
#include "reebforge/errors.hpp"
#include "reebforge/pl_oracle.hpp"

using namespace reebforge;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int count_degree(const ReebGraph& w, int degree) {
    int n = 0;
    for (size_t i = 0; i < w.vertices.size(); ++i)
        if (w.degree(static_cast<int>(i)) == degree) ++n;
    return n;
}

} // namespace

TEST_CASE("octahedron loads as a closed surface") {
    SimplicialSurface s = load_off(fixtures::octahedron_off());
    CHECK(s.vertices.size() == 6);
    CHECK(s.triangles.size() == 8);
    CHECK(euler_from_mesh(s) == 2);
}

TEST_CASE("octahedron height function sweeps to a path") {
    SimplicialSurface s = load_off(fixtures::octahedron_off());
    ReebGraph w = reeb_graph_pl(s);
    REQUIRE(w.vertices.size() == 2);
    REQUIRE(w.edges.size() == 1);
    CHECK(w.edges[0].genus == 0);
    CHECK(w.vertices[0].height == Rational(-1));
    CHECK(w.vertices[1].height == Rational(1));
}

TEST_CASE("vertical torus sweeps to the classical cycle") {
    SimplicialSurface s = load_off(fixtures::torus_off());
    CHECK(euler_from_mesh(s) == 0);
    ReebGraph w = reeb_graph_pl(s);
    REQUIRE(w.vertices.size() == 4);
    REQUIRE(w.edges.size() == 4);
    CHECK(count_degree(w, 1) == 2);
    CHECK(count_degree(w, 3) == 2);
    CHECK(w.cycle_rank() == 1);
}

TEST_CASE("torus structure is resolution independent") {
    for (auto [nt, np] : {std::pair{12, 6}, std::pair{16, 8}, std::pair{20, 10}}) {
        SimplicialSurface s = load_off(fixtures::torus_off(nt, np, 5.0, 2.0));
        ReebGraph w = reeb_graph_pl(s);
        CHECK(w.vertices.size() == 4);
        CHECK(count_degree(w, 1) == 2);
        CHECK(count_degree(w, 3) == 2);
        CHECK(w.cycle_rank() == 1);
    }
}

TEST_CASE("genus-2 fixture has chi -2 and at most 2 reeb cycles") {
    SimplicialSurface s = load_off(fixtures::genus2_off());
    CHECK(euler_from_mesh(s) == -2);
    ReebGraph w = reeb_graph_pl(s);
    CHECK(w.cycle_rank() <= 2);
    CHECK(w.cycle_rank() >= 1);
}

TEST_CASE("betti bound: reeb cycles never exceed the surface genus") {
    SimplicialSurface sphere = load_off(fixtures::octahedron_off());
    CHECK(reeb_graph_pl(sphere).cycle_rank() == 0);
    SimplicialSurface torus = load_off(fixtures::torus_off());
    CHECK(reeb_graph_pl(torus).cycle_rank() <= 1);
}

TEST_CASE("degree-1 reeb vertices equal the local extrema") {
    SimplicialSurface s = load_off(fixtures::torus_off());
    ReebGraph w = reeb_graph_pl(s);
    // wheel torus height: one min, one max
    CHECK(count_degree(w, 1) == 2);
}

TEST_CASE("meshes with boundary are rejected") {
    try {
        load_off(fixtures::open_square_off());
        FAIL("expected NotClosedSurface");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotClosedSurface);
    }
}

TEST_CASE("disconnected meshes are rejected at load") {
    try {
        load_off(fixtures::two_octahedra_off());
        FAIL("expected NotClosedSurface");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotClosedSurface);
    }
}

TEST_CASE("parse errors") {
    try {
        load_off("PLY\n3 1 0\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
    }
    try {
        load_off("OFF\n4 1 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n4 0 1 2 3\n");
        FAIL("expected ParseError for quad face");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
    }
}

TEST_CASE("sidecar values override z") {
    // octahedron swept along x instead of z: still a sphere, still a path
    std::string values = "1\n-1\n0\n0.25\n0.5\n-0.5\n";
    SimplicialSurface s = load_off(fixtures::octahedron_off(), values);
    CHECK(s.vertices[0].value == Rational(1));
    CHECK(s.vertices[3].value == Rational(1, 4));
    ReebGraph w = reeb_graph_pl(s);
    CHECK(w.vertices.size() == 2);
    CHECK(w.edges.size() == 1);
}

TEST_CASE("sidecar length mismatch is a parse error") {
    try {
        load_off(fixtures::octahedron_off(), "1\n2\n3\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
    }
}

TEST_CASE("rescaling the field preserves the structure") {
    SimplicialSurface s = load_off(fixtures::torus_off());
    ReebGraph w1 = reeb_graph_pl(s);

    SimplicialSurface scaled = s;
    for (MeshVertex& v : scaled.vertices)
        v.value = v.value * Rational(3) + Rational(7, 2);
    ReebGraph w2 = reeb_graph_pl(scaled);

    REQUIRE(w1.vertices.size() == w2.vertices.size());
    REQUIRE(w1.edges.size() == w2.edges.size());
    for (size_t i = 0; i < w1.vertices.size(); ++i) {
        CHECK(w2.vertices[i].height == w1.vertices[i].height * Rational(3) + Rational(7, 2));
        CHECK(w2.degree(static_cast<int>(i)) == w1.degree(static_cast<int>(i)));
    }
}

TEST_CASE("committed fixture files match the expected shapes") {
    std::string dir = REEBFORGE_FIXTURE_DIR;
    SimplicialSurface oct = load_off(slurp(dir + "/octahedron.off"));
    CHECK(euler_from_mesh(oct) == 2);
    SimplicialSurface torus = load_off(slurp(dir + "/torus.off"));
    CHECK(euler_from_mesh(torus) == 0);
    SimplicialSurface g2 = load_off(slurp(dir + "/genus2.off"));
    CHECK(euler_from_mesh(g2) == -2);
}

TEST_CASE("ties are broken by vertex index") {
    // a flat-topped octahedron: two vertices share the max z; simulation of
    // simplicity still yields a clean sphere sweep
    std::string off =
        "OFF\n6 8 12\n"
        "1 0 0.5\n-1 0 0.5\n0 1 0\n0 -1 0\n0 0 0.5\n0 0 -1\n"
        "3 4 0 2\n3 4 2 1\n3 4 1 3\n3 4 3 0\n"
        "3 5 2 0\n3 5 1 2\n3 5 3 1\n3 5 0 3\n";
    SimplicialSurface s = load_off(off);
    ReebGraph w = reeb_graph_pl(s);
    CHECK(w.cycle_rank() == 0);
    CHECK(count_degree(w, 1) >= 2);
}
