#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reebforge/errors.hpp"
#include "reebforge/random_graph.hpp"

using namespace reebforge;

TEST_CASE("forced bounds give the unique one-edge sphere graph") {
    LabeledGraph g = random_graph(42, GraphBounds{2, 1, 0});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.edge(0).genus == 0);
}

TEST_CASE("same seed, same graph") {
    LabeledGraph a = random_graph(12345, GraphBounds{10, 15, 4});
    LabeledGraph b = random_graph(12345, GraphBounds{10, 15, 4});
    CHECK(serialize_graph(a) == serialize_graph(b));
}

TEST_CASE("always connected, loop-free and within bounds over 10^4 seeds") {
    const GraphBounds bounds{10, 15, 4};
    bool saw_parallel = false;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        LabeledGraph g = random_graph(seed, bounds);
        CHECK(validate(g).ok());
        CHECK(has_good_function(g));
        CHECK(g.vertex_count() >= 2);
        CHECK(g.vertex_count() <= bounds.max_vertices);
        CHECK(g.edge_count() >= 1);
        CHECK(g.edge_count() <= bounds.max_edges);
        for (const Edge& e : g.edges()) {
            CHECK(e.genus >= 0);
            CHECK(e.genus <= bounds.max_genus);
        }
        for (EdgeId i = 0; i < g.edge_count() && !saw_parallel; ++i)
            for (EdgeId j = i + 1; j < g.edge_count() && !saw_parallel; ++j) {
                const Edge& a = g.edge(i);
                const Edge& b = g.edge(j);
                if ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u)) saw_parallel = true;
            }
    }
    CHECK(saw_parallel); // multigraphs really do occur
}

TEST_CASE("degenerate bounds are rejected") {
    try {
        random_graph(0, GraphBounds{1, 1, 0});
        FAIL("expected BadConfig");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadConfig);
    }
}
