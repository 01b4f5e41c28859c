#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "reebforge/rational.hpp"

namespace reebforge {

using VertexId = int;
using EdgeId = int;

struct Vertex {
    std::string name;
    std::optional<Rational> height;
};

struct Edge {
    VertexId u = -1;
    VertexId v = -1;
    int genus = 0;
    bool is_loop() const { return u == v; }
};

/// Finite multigraph with a non-negative genus label on each edge.
/// Vertex and edge ids are dense indices in declaration order; that order
/// is the "stable id order" used by deterministic policies downstream.
class LabeledGraph {
public:
    VertexId add_vertex(std::string name, std::optional<Rational> height = std::nullopt);
    EdgeId add_edge(VertexId u, VertexId v, int genus);
    EdgeId add_edge(std::string_view u_name, std::string_view v_name, int genus);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Vertex& vertex(VertexId id) const { return vertices_[static_cast<size_t>(id)]; }
    const Edge& edge(EdgeId id) const { return edges_[static_cast<size_t>(id)]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<VertexId> find_vertex(std::string_view name) const;

    /// Incident edge ids in ascending order; a self-loop appears once.
    const std::vector<EdgeId>& incident_edges(VertexId v) const {
        return incidence_[static_cast<size_t>(v)];
    }

    /// A self-loop counts twice, as usual for multigraphs.
    int degree(VertexId v) const;

    int self_loop_count() const;
    bool has_self_loop() const { return self_loop_count() > 0; }
    bool is_connected() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::unordered_map<std::string, VertexId> name_index_;
};

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Height assignment making the graph function injective on every edge.
struct GoodFunction {
    std::vector<Rational> heights; // indexed by VertexId
    const Rational& at(VertexId v) const { return heights[static_cast<size_t>(v)]; }
};

enum class ExtremumSide { Min, Max };

enum class VertexKind {
    Interior,      // incident edges on both sides of the vertex height
    ExtremumMulti, // degree >= 2, all incident edges on one side
    ExtremumDeg1,  // degree 1
};

struct VertexClass {
    VertexKind kind = VertexKind::Interior;
    ExtremumSide side = ExtremumSide::Min; // meaningful for the extremum kinds
};

enum class HeightPolicy { DistinctIntegers, RespectGivenHeights };

/// Line-based graph format:
///   vertex <id> [height=<p>/<q>|<int>]
///   edge <u> <v> genus=<nonneg-int>
/// '#' starts a comment. Throws Error with position-annotated messages.
LabeledGraph parse_graph(std::string_view text);

/// Inverse of parse_graph up to formatting; used by the CLI and round-trip tests.
std::string serialize_graph(const LabeledGraph& g);

/// Checks the standing hypotheses (connected, at least one edge, genus >= 0).
/// Self-loops are not a validation problem; has_good_function covers them.
ValidationReport validate(const LabeledGraph& g);

/// True iff the graph admits a good function, i.e. has no self-loop.
bool has_good_function(const LabeledGraph& g);

GoodFunction synthesize_good_function(const LabeledGraph& g,
                                      HeightPolicy policy = HeightPolicy::DistinctIntegers);

std::vector<VertexClass> classify_vertices(const LabeledGraph& g, const GoodFunction& gf);

/// Deterministic DOT output; genus as edge label, height as part of the
/// vertex label when a good function is supplied.
std::string export_dot(const LabeledGraph& g, const GoodFunction* gf = nullptr);

} // namespace reebforge
