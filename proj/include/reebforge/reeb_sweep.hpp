#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reebforge/assembler.hpp"

namespace reebforge {

struct ReebVertex {
    std::string name;
    Rational height;
};

struct ReebEdge {
    int u = -1;
    int v = -1;
    int genus = 0;
};

/// Quotient graph reconstructed from sweep dynamics: one vertex per event,
/// one edge per component lifetime.
struct ReebGraph {
    std::vector<ReebVertex> vertices;
    std::vector<ReebEdge> edges;

    int degree(int v) const;
    /// First Betti number, assuming the graph is connected.
    int cycle_rank() const {
        return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
    }
};

/// Replays the plan's events in ascending value order with fresh anonymous
/// component identities. With strip_identities the output vertices carry
/// synthetic names, so nothing graph-derived leaks into the result; the
/// replay itself never consults the plan's graph either way.
ReebGraph sweep(const RealizationPlan& plan, bool strip_identities);

struct Isomorphism {
    std::vector<VertexId> map; // reeb vertex index -> graph vertex id
};

/// Exact backtracking search for a bijection preserving multigraph
/// adjacency, edge genus labels and vertex heights. Vertices are pruned by
/// (height, degree, sorted incident genus multiset).
std::optional<Isomorphism> find_isomorphism(const ReebGraph& w, const LabeledGraph& g,
                                            const GoodFunction& gf);

/// Relaxed searches used to attribute a verification failure to a specific
/// realization property.
std::optional<Isomorphism> find_isomorphism_adjacency(const ReebGraph& w, const LabeledGraph& g);
std::optional<Isomorphism> find_isomorphism_genus(const ReebGraph& w, const LabeledGraph& g);

struct VerificationReport {
    bool property1 = false; // quotient graph isomorphic as a multigraph
    bool property2 = false; // ... preserving edge genus labels
    bool property3 = false; // ... preserving vertex heights
    bool chi_zero = false;
    std::map<std::string, int> tags; // singular normal-form inventory
    long long elapsed_ms = 0;

    bool passed() const { return property1 && property2 && property3 && chi_zero; }
};

/// assemble -> invariants -> sweep(strip) -> isomorphism search, reported
/// per realization property. Propagates LoopPresent and friends from the
/// stages.
VerificationReport verify_realization(const LabeledGraph& g, const GoodFunction& gf);

std::string report_to_json(const VerificationReport& report, bool include_timing);

std::string reeb_to_dot(const ReebGraph& w);
std::string reeb_to_json(const ReebGraph& w);

} // namespace reebforge
