#include "reebforge/surface_algebra.hpp"

#include <algorithm>

#include "reebforge/errors.hpp"

namespace reebforge {

SurfaceCollection SurfaceCollection::from_genera(const std::vector<int>& genera) {
    SurfaceCollection s;
    for (int g : genera) s.add(g);
    return s;
}

ComponentId SurfaceCollection::add(int genus) {
    if (genus < 0) raise(Errc::IllegalMove, "component genus must be non-negative");
    ComponentId id = next_id_++;
    components_.push_back(SurfaceComponent{id, genus});
    return id;
}

void SurfaceCollection::add_with_id(ComponentId id, int genus) {
    if (genus < 0) raise(Errc::IllegalMove, "component genus must be non-negative");
    if (id < 0) raise(Errc::IllegalMove, "component id must be non-negative");
    auto it = std::lower_bound(components_.begin(), components_.end(), id,
                               [](const SurfaceComponent& c, ComponentId key) { return c.id < key; });
    if (it != components_.end() && it->id == id)
        raise(Errc::IllegalMove, "component id " + std::to_string(id) + " already in use");
    components_.insert(it, SurfaceComponent{id, genus});
    next_id_ = std::max(next_id_, id + 1);
}

namespace {

std::vector<SurfaceComponent>::const_iterator find_component(
    const std::vector<SurfaceComponent>& comps, ComponentId id) {
    auto it = std::lower_bound(comps.begin(), comps.end(), id,
                               [](const SurfaceComponent& c, ComponentId key) { return c.id < key; });
    if (it == comps.end() || it->id != id) return comps.end();
    return it;
}

} // namespace

void SurfaceCollection::remove(ComponentId id) {
    auto it = find_component(components_, id);
    if (it == components_.end())
        raise(Errc::UnknownComponent, "component " + std::to_string(id) + " not in collection");
    components_.erase(it);
}

bool SurfaceCollection::contains(ComponentId id) const {
    return find_component(components_, id) != components_.end();
}

int SurfaceCollection::genus_of(ComponentId id) const {
    auto it = find_component(components_, id);
    if (it == components_.end())
        raise(Errc::UnknownComponent, "component " + std::to_string(id) + " not in collection");
    return it->genus;
}

void SurfaceCollection::set_genus(ComponentId id, int genus) {
    auto it = find_component(components_, id);
    if (it == components_.end())
        raise(Errc::UnknownComponent, "component " + std::to_string(id) + " not in collection");
    components_[static_cast<size_t>(it - components_.begin())].genus = genus;
}

std::vector<int> SurfaceCollection::genus_multiset() const {
    std::vector<int> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.genus);
    std::sort(out.begin(), out.end());
    return out;
}

HandleMove HandleMove::join(ComponentId a, ComponentId b, ComponentId out) {
    HandleMove m;
    m.op = Op::Join;
    m.a = a;
    m.b = b;
    m.out = out;
    return m;
}

HandleMove HandleMove::add_genus(ComponentId a) {
    HandleMove m;
    m.op = Op::AddGenus;
    m.a = a;
    return m;
}

HandleMove HandleMove::split(ComponentId a, int left_genus, int right_genus,
                             ComponentId out_left, ComponentId out_right) {
    HandleMove m;
    m.op = Op::Split;
    m.a = a;
    m.left_genus = left_genus;
    m.right_genus = right_genus;
    m.out = out_left;
    m.out_right = out_right;
    return m;
}

HandleMove HandleMove::drop_genus(ComponentId a) {
    HandleMove m;
    m.op = Op::DropGenus;
    m.a = a;
    return m;
}

const char* normal_form_name(NormalForm tag) {
    switch (tag) {
        case NormalForm::Morse: return "Morse";
        case NormalForm::SubmersionThenMorse: return "SubmersionThenMorse";
        case NormalForm::MorseThenMorse: return "MorseThenMorse";
        case NormalForm::FoldThenHeight: return "FoldThenHeight";
    }
    return "Unknown";
}

int euler_characteristic(const SurfaceCollection& s) {
    int chi = 0;
    for (const auto& c : s.components()) chi += 2 - 2 * c.genus;
    return chi;
}

SurfaceCollection apply_handle(const SurfaceCollection& s, const HandleMove& move) {
    SurfaceCollection out = s;
    switch (move.op) {
        case HandleMove::Op::Join: {
            if (move.a == move.b)
                raise(Errc::IllegalMove, "join needs two distinct components");
            int ga = out.genus_of(move.a);
            int gb = out.genus_of(move.b);
            out.remove(move.a);
            out.remove(move.b);
            out.add_with_id(move.out, ga + gb);
            break;
        }
        case HandleMove::Op::AddGenus: {
            out.set_genus(move.a, out.genus_of(move.a) + 1);
            break;
        }
        case HandleMove::Op::Split: {
            int g = out.genus_of(move.a);
            if (move.left_genus < 0 || move.right_genus < 0 ||
                move.left_genus + move.right_genus != g)
                raise(Errc::IllegalMove, "split genera must partition genus " + std::to_string(g));
            out.remove(move.a);
            out.add_with_id(move.out, move.left_genus);
            out.add_with_id(move.out_right, move.right_genus);
            break;
        }
        case HandleMove::Op::DropGenus: {
            int g = out.genus_of(move.a);
            if (g < 1)
                raise(Errc::IllegalMove, "cannot drop genus of a sphere (component " +
                                             std::to_string(move.a) + ")");
            out.set_genus(move.a, g - 1);
            break;
        }
    }
    return out;
}

CobordismCertificate plan_cobordism(const SurfaceCollection& s, const SurfaceCollection& t,
                                    const Rational& value) {
    if (s.empty() || t.empty())
        raise(Errc::EmptySide, "cobordism planning needs nonempty collections on both sides");

    CobordismCertificate cert;
    cert.incoming = s;
    cert.singular_value = value;

    SurfaceCollection work = s;
    auto emit = [&](HandleMove move) {
        work = apply_handle(work, move);
        cert.schedule.push_back(move);
        if (move.is_one_handle()) {
            ++cert.n1;
            cert.singular_points.push_back(SingularPoint{1, NormalForm::Morse});
        } else {
            ++cert.n2;
            cert.singular_points.push_back(SingularPoint{2, NormalForm::Morse});
        }
    };

    ComponentId fresh = 0;
    for (const auto& c : work.components()) fresh = std::max(fresh, c.id + 1);

    // P1: drop all genus, component by component in ascending id.
    const std::vector<SurfaceComponent> snapshot = work.components();
    for (const auto& c : snapshot)
        for (int i = 0; i < c.genus; ++i) emit(HandleMove::drop_genus(c.id));

    // P2: join the spheres pairwise into a single sphere.
    while (work.size() > 1) {
        ComponentId a = work.components()[0].id;
        ComponentId b = work.components()[1].id;
        emit(HandleMove::join(a, b, fresh));
        ++fresh;
    }

    // P3: carve one sphere per extra target component off the single sphere.
    std::vector<ComponentId> assigned; // planner component per target, in target order
    ComponentId pool = work.components()[0].id;
    for (int j = 0; j + 1 < t.size(); ++j) {
        emit(HandleMove::split(pool, 0, 0, fresh, fresh + 1));
        assigned.push_back(fresh);
        pool = fresh + 1;
        fresh += 2;
    }
    assigned.push_back(pool);

    // P4: regrow the target genera in target order.
    for (int j = 0; j < t.size(); ++j)
        for (int i = 0; i < t.components()[static_cast<size_t>(j)].genus; ++i)
            emit(HandleMove::add_genus(assigned[static_cast<size_t>(j)]));

    // Every vertex piece must carry a singular point; a sphere-to-sphere
    // plan gets the extra handle pair.
    if (cert.schedule.empty()) {
        emit(HandleMove::add_genus(pool));
        emit(HandleMove::drop_genus(pool));
    }

    // outgoing listed in target order: components() is ascending id and the
    // assigned ids increase with the target index by construction
    cert.outgoing = work;
    if (work.genus_multiset() != t.genus_multiset())
        raise(Errc::IllegalMove, "internal: planned schedule does not reach the target collection");

    cert.chi = euler_characteristic(cert.incoming) - cert.n1 + cert.n2;
    return cert;
}

int certificate_chi(const CobordismCertificate& cert) {
    return euler_characteristic(cert.incoming) - cert.n1 + cert.n2;
}

} // namespace reebforge
