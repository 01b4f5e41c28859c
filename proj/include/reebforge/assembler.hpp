#pragma once

#include <string>
#include <vector>

#include "reebforge/graph_model.hpp"
#include "reebforge/local_models.hpp"

namespace reebforge {

/// One leveled event of the plan: the vertex model plus the component
/// lines (ports, keyed by edge id) it consumes from below and feeds above.
struct PlanEvent {
    VertexModel model;
    std::vector<EdgeId> down_ports; // descending incident edges, ascending id
    std::vector<EdgeId> up_ports;   // ascending incident edges, ascending id
};

struct PlanInvariants {
    int global_chi = 0;
    bool connected = false;
    bool orientable = true;
    std::vector<Rational> singular_values; // sorted, deduplicated
    bool all_ok() const { return global_chi == 0 && connected && orientable; }
};

/// The assembled model of (M, f): all vertex events in sweep order, one
/// cylinder per edge, per-edge endpoint tracking, and the global invariant
/// report.
struct RealizationPlan {
    LabeledGraph graph;
    GoodFunction gf;
    std::vector<PlanEvent> events; // ascending (value, vertex id)

    struct Tracking {
        VertexId lower_vertex = -1;
        VertexId upper_vertex = -1;
    };
    std::vector<CylinderModel> cylinders; // indexed by EdgeId
    std::vector<Tracking> tracking;       // indexed by EdgeId

    PlanInvariants invariants;
};

RealizationPlan assemble(const LabeledGraph& g, const GoodFunction& gf);

/// chi of the glued closed manifold: sum of piece chis minus one closed
/// gluing surface per cylinder end. Zero for every valid plan.
int manifold_chi(const RealizationPlan& plan);

PlanInvariants plan_invariants(const RealizationPlan& plan);

/// RealizationPlan JSON with byte-stable field order.
std::string plan_to_json(const RealizationPlan& plan);

} // namespace reebforge
