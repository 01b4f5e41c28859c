#include "reebforge/random_graph.hpp"

#include <algorithm>
#include <random>

#include "reebforge/errors.hpp"

namespace reebforge {

LabeledGraph random_graph(std::uint64_t seed, const GraphBounds& bounds) {
    if (bounds.max_vertices < 2 || bounds.max_edges < 1 || bounds.max_genus < 0)
        raise(Errc::BadConfig, "bounds must allow at least 2 vertices and 1 edge");

    std::mt19937_64 rng(seed);
    auto draw = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

    int max_v = std::min(bounds.max_vertices, bounds.max_edges + 1);
    int n = 2 + draw(max_v - 1);

    LabeledGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));

    for (int i = 1; i < n; ++i)
        g.add_edge(draw(i), i, draw(bounds.max_genus + 1));

    int extra = draw(bounds.max_edges - (n - 1) + 1);
    for (int i = 0; i < extra; ++i) {
        int u = draw(n);
        int v = draw(n - 1);
        if (v >= u) ++v; // never a loop
        g.add_edge(u, v, draw(bounds.max_genus + 1));
    }
    return g;
}

} // namespace reebforge
