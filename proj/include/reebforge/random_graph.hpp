#pragma once

#include <cstdint>

#include "reebforge/graph_model.hpp"

namespace reebforge {

struct GraphBounds {
    int max_vertices = 10;
    int max_edges = 15;
    int max_genus = 4;
};

/// Deterministic connected loop-free labeled multigraph: a random spanning
/// tree plus extra non-loop edges, genus labels uniform in [0, max_genus].
/// The same seed and bounds always produce the same graph, on every
/// platform (the generator avoids distribution classes with unspecified
/// output).
LabeledGraph random_graph(std::uint64_t seed, const GraphBounds& bounds);

} // namespace reebforge
