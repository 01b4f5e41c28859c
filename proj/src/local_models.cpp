#include "reebforge/local_models.hpp"

#include <algorithm>

#include "reebforge/errors.hpp"

namespace reebforge {

int VertexModel::chi() const {
    if (is_cap()) return 1 - cap().k;
    if (is_interior()) return certificate_chi(interior().cert);
    return certificate_chi(folded().cert);
}

std::vector<SingularPoint> VertexModel::singular_inventory() const {
    std::vector<SingularPoint> out;
    if (is_interior()) {
        out = interior().cert.singular_points;
    } else if (is_folded()) {
        out = folded().cert.singular_points;
        // the fold level away from the handle points
        out.push_back(SingularPoint{1, NormalForm::SubmersionThenMorse});
    } else {
        const FoldCapModel& c = cap();
        if (c.k == 0) {
            out.push_back(SingularPoint{0, NormalForm::Morse}); // definite Morse point
        } else {
            out.push_back(SingularPoint{0, NormalForm::FoldThenHeight}); // definite fold circle
            for (int i = 0; i < c.index1_curves; ++i)
                out.push_back(SingularPoint{1, NormalForm::FoldThenHeight});
        }
    }
    return out;
}

VertexModel build_interior_model(VertexId v, const std::vector<int>& below_genera,
                                 const std::vector<int>& above_genera, const Rational& value) {
    if (below_genera.empty() || above_genera.empty())
        raise(Errc::EmptySide, "interior vertex needs edges on both sides");
    VertexModel model;
    model.vertex = v;
    model.value = value;
    InteriorModel payload;
    payload.cert = plan_cobordism(SurfaceCollection::from_genera(below_genera),
                                  SurfaceCollection::from_genera(above_genera), value);
    model.payload = std::move(payload);
    return model;
}

VertexModel build_folded_extremum_model(VertexId v, const std::vector<IncidentEdge>& incident,
                                        const Rational& value, ExtremumSide side) {
    if (incident.size() < 2)
        raise(Errc::DegreeTooSmall, "folded extremum needs degree >= 2, got " +
                                        std::to_string(incident.size()));
    bool want_descending = side == ExtremumSide::Max;
    for (const IncidentEdge& e : incident)
        if (e.descending != want_descending)
            raise(Errc::EdgesOnBothSides, "extremum vertex has incident edges on both sides");

    std::vector<IncidentEdge> ordered = incident;
    std::sort(ordered.begin(), ordered.end(),
              [](const IncidentEdge& a, const IncidentEdge& b) { return a.edge < b.edge; });

    FoldedExtremumModel payload;
    payload.side = side;
    payload.group1.push_back(ordered.front().edge);
    std::vector<int> g1{ordered.front().genus};
    std::vector<int> g2;
    for (size_t i = 1; i < ordered.size(); ++i) {
        payload.group2.push_back(ordered[i].edge);
        g2.push_back(ordered[i].genus);
    }
    payload.cert = plan_cobordism(SurfaceCollection::from_genera(g1),
                                  SurfaceCollection::from_genera(g2), value);
    for (SingularPoint& p : payload.cert.singular_points)
        p.tag = NormalForm::MorseThenMorse;

    VertexModel model;
    model.vertex = v;
    model.value = value;
    model.payload = std::move(payload);
    return model;
}

VertexModel build_cap_model(int k, const Rational& value, ExtremumSide side) {
    if (k < 0) raise(Errc::IllegalMove, "cap genus must be non-negative");
    FoldCapModel payload;
    payload.k = k;
    payload.index1_curves = std::max(k - 1, 0);
    payload.side = side;
    VertexModel model;
    model.value = value;
    model.payload = payload;
    return model;
}

CylinderModel build_edge_model(EdgeId e, int genus, const Rational& low, const Rational& high) {
    if (!(low < high))
        raise(Errc::BadInterval, "cylinder interval needs low < high, got " + low.str() +
                                     " .. " + high.str());
    CylinderModel model;
    model.edge = e;
    model.genus = genus;
    model.low = low;
    model.high = high;
    return model;
}

std::vector<int> born_genera(const VertexModel& model) {
    std::vector<int> out;
    if (model.is_cap()) {
        if (model.cap().side == ExtremumSide::Min) out.push_back(model.cap().k);
    } else if (model.is_interior()) {
        for (const auto& c : model.interior().cert.outgoing.components()) out.push_back(c.genus);
    } else {
        const FoldedExtremumModel& f = model.folded();
        if (f.side == ExtremumSide::Min) {
            // ports cover group1 then group2, which is ascending edge order
            out.push_back(f.cert.incoming.components().front().genus);
            for (const auto& c : f.cert.outgoing.components()) out.push_back(c.genus);
        }
    }
    return out;
}

int consumed_count(const VertexModel& model) {
    if (model.is_cap()) return model.cap().side == ExtremumSide::Max ? 1 : 0;
    if (model.is_interior()) return model.interior().cert.incoming.size();
    const FoldedExtremumModel& f = model.folded();
    return f.side == ExtremumSide::Max ? static_cast<int>(f.group1.size() + f.group2.size()) : 0;
}

} // namespace reebforge
