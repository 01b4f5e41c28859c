#include "reebforge/assembler.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>

#include "reebforge/errors.hpp"

namespace reebforge {

using ordered_json = nlohmann::ordered_json;

RealizationPlan assemble(const LabeledGraph& g, const GoodFunction& gf) {
    if (g.has_self_loop())
        raise(Errc::LoopPresent, "graph has a self-loop, no realization exists");
    ValidationReport vr = validate(g);
    if (!vr.ok())
        raise(Errc::InvalidGraph, "graph fails validation: " + vr.problems.front());
    if (static_cast<int>(gf.heights.size()) != g.vertex_count())
        raise(Errc::NotGood, "good function does not cover every vertex");
    for (const Edge& e : g.edges())
        if (gf.at(e.u) == gf.at(e.v))
            raise(Errc::NotGood, "edge " + g.vertex(e.u).name + "-" + g.vertex(e.v).name +
                                     " has equal endpoint heights");

    RealizationPlan plan;
    plan.graph = g;
    plan.gf = gf;

    std::vector<VertexClass> classes = classify_vertices(g, gf);

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        PlanEvent event;
        std::vector<int> below_genera, above_genera;
        std::vector<IncidentEdge> incident;
        for (EdgeId e : g.incident_edges(v)) {
            const Edge& ed = g.edge(e);
            VertexId w = ed.u == v ? ed.v : ed.u;
            bool descending = gf.at(w) < gf.at(v);
            incident.push_back(IncidentEdge{e, ed.genus, descending});
            if (descending) {
                event.down_ports.push_back(e);
                below_genera.push_back(ed.genus);
            } else {
                event.up_ports.push_back(e);
                above_genera.push_back(ed.genus);
            }
        }

        const VertexClass& cls = classes[static_cast<size_t>(v)];
        switch (cls.kind) {
            case VertexKind::Interior:
                event.model = build_interior_model(v, below_genera, above_genera, gf.at(v));
                break;
            case VertexKind::ExtremumMulti:
                event.model = build_folded_extremum_model(v, incident, gf.at(v), cls.side);
                break;
            case VertexKind::ExtremumDeg1:
                event.model = build_cap_model(g.edge(g.incident_edges(v).front()).genus,
                                              gf.at(v), cls.side);
                event.model.vertex = v;
                break;
        }
        plan.events.push_back(std::move(event));
    }

    std::sort(plan.events.begin(), plan.events.end(), [](const PlanEvent& a, const PlanEvent& b) {
        if (a.model.value != b.model.value) return a.model.value < b.model.value;
        return a.model.vertex < b.model.vertex;
    });

    plan.cylinders.reserve(static_cast<size_t>(g.edge_count()));
    plan.tracking.reserve(static_cast<size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        VertexId lower = gf.at(ed.u) < gf.at(ed.v) ? ed.u : ed.v;
        VertexId upper = lower == ed.u ? ed.v : ed.u;
        plan.cylinders.push_back(build_edge_model(e, ed.genus, gf.at(lower), gf.at(upper)));
        plan.tracking.push_back(RealizationPlan::Tracking{lower, upper});
    }

    plan.invariants = plan_invariants(plan);
    return plan;
}

int manifold_chi(const RealizationPlan& plan) {
    int chi = 0;
    for (const PlanEvent& event : plan.events) chi += event.model.chi();
    for (const CylinderModel& cyl : plan.cylinders) chi += cyl.chi();
    // each cylinder end is glued along one closed surface of the edge genus
    for (const CylinderModel& cyl : plan.cylinders) chi -= 2 * (2 - 2 * cyl.genus);
    return chi;
}

PlanInvariants plan_invariants(const RealizationPlan& plan) {
    PlanInvariants inv;
    inv.global_chi = manifold_chi(plan);
    inv.orientable = true;

    // connectivity of the tracking graph: events joined by cylinders
    int n = static_cast<int>(plan.events.size());
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    std::vector<int> event_of_vertex(static_cast<size_t>(plan.graph.vertex_count()), -1);
    for (int i = 0; i < n; ++i)
        event_of_vertex[static_cast<size_t>(plan.events[static_cast<size_t>(i)].model.vertex)] = i;
    for (const auto& track : plan.tracking) {
        int a = find(event_of_vertex[static_cast<size_t>(track.lower_vertex)]);
        int b = find(event_of_vertex[static_cast<size_t>(track.upper_vertex)]);
        if (a != b) parent[static_cast<size_t>(a)] = b;
    }
    int roots = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++roots;
    inv.connected = n > 0 && roots == 1;

    for (const PlanEvent& event : plan.events) inv.singular_values.push_back(event.model.value);
    std::sort(inv.singular_values.begin(), inv.singular_values.end());
    inv.singular_values.erase(std::unique(inv.singular_values.begin(), inv.singular_values.end()),
                              inv.singular_values.end());
    return inv;
}

namespace {

ordered_json move_to_json(const HandleMove& move) {
    ordered_json j;
    switch (move.op) {
        case HandleMove::Op::Join:
            j["op"] = "join";
            j["kind"] = "one_handle";
            j["a"] = move.a;
            j["b"] = move.b;
            j["out"] = move.out;
            break;
        case HandleMove::Op::AddGenus:
            j["op"] = "add_genus";
            j["kind"] = "one_handle";
            j["a"] = move.a;
            break;
        case HandleMove::Op::Split:
            j["op"] = "split";
            j["kind"] = "two_handle";
            j["a"] = move.a;
            j["left_genus"] = move.left_genus;
            j["right_genus"] = move.right_genus;
            j["out_left"] = move.out;
            j["out_right"] = move.out_right;
            break;
        case HandleMove::Op::DropGenus:
            j["op"] = "drop_genus";
            j["kind"] = "two_handle";
            j["a"] = move.a;
            break;
    }
    return j;
}

ordered_json collection_to_json(const SurfaceCollection& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : s.components()) arr.push_back({{"id", c.id}, {"genus", c.genus}});
    return arr;
}

const char* event_kind(const VertexModel& model) {
    if (model.is_interior()) return "interior";
    if (model.is_folded())
        return model.folded().side == ExtremumSide::Min ? "folded_extremum_min"
                                                        : "folded_extremum_max";
    return model.cap().side == ExtremumSide::Min ? "fold_cap_min" : "fold_cap_max";
}

ordered_json event_to_json(const RealizationPlan& plan, const PlanEvent& event) {
    const VertexModel& model = event.model;
    ordered_json j;
    j["vertex"] = plan.graph.vertex(model.vertex).name;
    j["value"] = model.value.str();
    j["kind"] = event_kind(model);

    ordered_json schedule = ordered_json::array();
    int n1 = 0, n2 = 0;
    if (model.is_interior() || model.is_folded()) {
        const CobordismCertificate& cert =
            model.is_interior() ? model.interior().cert : model.folded().cert;
        for (const HandleMove& move : cert.schedule) schedule.push_back(move_to_json(move));
        n1 = cert.n1;
        n2 = cert.n2;
        j["incoming"] = collection_to_json(cert.incoming);
        j["outgoing"] = collection_to_json(cert.outgoing);
    } else {
        j["k"] = model.cap().k;
        j["index1_curves"] = model.cap().index1_curves;
    }
    j["schedule"] = std::move(schedule);
    j["n1"] = n1;
    j["n2"] = n2;
    j["chi"] = model.chi();

    ordered_json tags = ordered_json::array();
    for (const SingularPoint& p : model.singular_inventory())
        tags.push_back(normal_form_name(p.tag));
    j["tags"] = std::move(tags);

    j["down_ports"] = event.down_ports;
    j["up_ports"] = event.up_ports;
    return j;
}

} // namespace

std::string plan_to_json(const RealizationPlan& plan) {
    ordered_json j;

    ordered_json vertices = ordered_json::array();
    for (const Vertex& v : plan.graph.vertices()) {
        ordered_json jv;
        jv["name"] = v.name;
        if (v.height) jv["height"] = v.height->str();
        vertices.push_back(std::move(jv));
    }
    ordered_json edges = ordered_json::array();
    for (const Edge& e : plan.graph.edges())
        edges.push_back({{"u", plan.graph.vertex(e.u).name},
                         {"v", plan.graph.vertex(e.v).name},
                         {"genus", e.genus}});
    j["graph"] = {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};

    ordered_json gf = ordered_json::object();
    for (VertexId v = 0; v < plan.graph.vertex_count(); ++v)
        gf[plan.graph.vertex(v).name] = plan.gf.at(v).str();
    j["good_function"] = std::move(gf);

    ordered_json events = ordered_json::array();
    for (const PlanEvent& event : plan.events) events.push_back(event_to_json(plan, event));
    j["events"] = std::move(events);

    ordered_json cylinders = ordered_json::array();
    for (const CylinderModel& cyl : plan.cylinders) {
        const auto& track = plan.tracking[static_cast<size_t>(cyl.edge)];
        cylinders.push_back({{"edge", cyl.edge},
                             {"lower", plan.graph.vertex(track.lower_vertex).name},
                             {"upper", plan.graph.vertex(track.upper_vertex).name},
                             {"genus", cyl.genus},
                             {"low", cyl.low.str()},
                             {"high", cyl.high.str()}});
    }
    j["cylinders"] = std::move(cylinders);

    ordered_json values = ordered_json::array();
    for (const Rational& v : plan.invariants.singular_values) values.push_back(v.str());
    j["invariants"] = {{"global_chi", plan.invariants.global_chi},
                       {"connected", plan.invariants.connected},
                       {"orientable", plan.invariants.orientable},
                       {"singular_values", std::move(values)}};

    return j.dump(2) + "\n";
}

} // namespace reebforge
