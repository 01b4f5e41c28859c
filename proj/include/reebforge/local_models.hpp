#pragma once

#include <variant>
#include <vector>

#include "reebforge/graph_model.hpp"
#include "reebforge/surface_algebra.hpp"

namespace reebforge {

/// Vertex-local model around a non-extremal vertex: one Morse singular
/// value between the descending and the ascending level surfaces.
struct InteriorModel {
    CobordismCertificate cert;
};

/// Incident edge of an extremal vertex as seen from the vertex.
struct IncidentEdge {
    EdgeId edge = -1;
    int genus = 0;
    bool descending = false; // other endpoint lies below the vertex
};

/// Local model for an extremum of degree >= 2: the incident edges are split
/// into two nonempty groups, a cobordism runs between the two group
/// surfaces, and the whole picture is folded through a parabola so the
/// singular value is the extremum. Handle points compose two Morse
/// functions; the rest of the singular level is a submersion composed with
/// a Morse function.
struct FoldedExtremumModel {
    std::vector<EdgeId> group1; // single lowest edge id
    std::vector<EdgeId> group2; // the rest, ascending
    CobordismCertificate cert;  // group1 surfaces -> group2 surfaces
    ExtremumSide side = ExtremumSide::Max;
};

/// Local model for a degree-1 extremum: a fold map into a disc composed
/// with the disc's height function, capping off a genus-k level surface.
struct FoldCapModel {
    int k = 0;
    int index1_curves = 0; // max(k-1, 0)
    ExtremumSide side = ExtremumSide::Min;
};

struct VertexModel {
    VertexId vertex = -1;
    Rational value;
    std::variant<InteriorModel, FoldedExtremumModel, FoldCapModel> payload;

    bool is_interior() const { return std::holds_alternative<InteriorModel>(payload); }
    bool is_folded() const { return std::holds_alternative<FoldedExtremumModel>(payload); }
    bool is_cap() const { return std::holds_alternative<FoldCapModel>(payload); }

    const InteriorModel& interior() const { return std::get<InteriorModel>(payload); }
    const FoldedExtremumModel& folded() const { return std::get<FoldedExtremumModel>(payload); }
    const FoldCapModel& cap() const { return std::get<FoldCapModel>(payload); }

    /// Euler characteristic of the compact local piece.
    int chi() const;

    /// Singular inventory of the local function: handle points plus, for a
    /// folded extremum, the submersion stratum of the fold level; for a cap,
    /// the definite fold circle (or Morse point when k = 0) plus the k-1
    /// index-1 curves.
    std::vector<SingularPoint> singular_inventory() const;
};

/// Cylinder over the open edge interval; no singular points.
struct CylinderModel {
    EdgeId edge = -1;
    int genus = 0;
    Rational low;
    Rational high;

    int chi() const { return 2 - 2 * genus; }
};

VertexModel build_interior_model(VertexId v, const std::vector<int>& below_genera,
                                 const std::vector<int>& above_genera, const Rational& value);

VertexModel build_folded_extremum_model(VertexId v, const std::vector<IncidentEdge>& incident,
                                        const Rational& value, ExtremumSide side);

/// Vertex id is attached by the assembler; standalone callers get -1.
VertexModel build_cap_model(int k, const Rational& value, ExtremumSide side);

CylinderModel build_edge_model(EdgeId e, int genus, const Rational& low, const Rational& high);

/// Genera of the components this model births on its ascending ports, in
/// port order. For a folded minimum the ports cover all incident edges.
std::vector<int> born_genera(const VertexModel& model);

/// Number of components the model consumes from its descending ports.
int consumed_count(const VertexModel& model);

} // namespace reebforge
