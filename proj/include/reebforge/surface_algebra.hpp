#pragma once

#include <vector>

#include "reebforge/rational.hpp"

namespace reebforge {

using ComponentId = int;

struct SurfaceComponent {
    ComponentId id = -1;
    int genus = 0;
};

/// Multiset of closed connected orientable surfaces, keyed by component id.
/// Components stay sorted by ascending id.
class SurfaceCollection {
public:
    static SurfaceCollection from_genera(const std::vector<int>& genera);

    ComponentId add(int genus);
    void add_with_id(ComponentId id, int genus);
    void remove(ComponentId id);
    bool contains(ComponentId id) const;
    int genus_of(ComponentId id) const;
    void set_genus(ComponentId id, int genus);

    bool empty() const { return components_.empty(); }
    int size() const { return static_cast<int>(components_.size()); }
    const std::vector<SurfaceComponent>& components() const { return components_; }

    /// Genera in ascending order; the multiset identity of the collection.
    std::vector<int> genus_multiset() const;

private:
    std::vector<SurfaceComponent> components_; // ascending id
    ComponentId next_id_ = 0;
};

/// One elementary surgery on the level surface. A 1-handle joins two
/// components or adds genus (chi -2); a 2-handle splits a component or
/// drops genus (chi +2). Created components carry the fresh ids recorded
/// in the move, so a schedule replays deterministically.
struct HandleMove {
    enum class Op { Join, AddGenus, Split, DropGenus };

    Op op = Op::AddGenus;
    ComponentId a = -1;
    ComponentId b = -1;         // Join only
    int left_genus = 0;         // Split only
    int right_genus = 0;        // Split only
    ComponentId out = -1;       // Join and Split (left part)
    ComponentId out_right = -1; // Split only

    bool is_one_handle() const { return op == Op::Join || op == Op::AddGenus; }

    static HandleMove join(ComponentId a, ComponentId b, ComponentId out);
    static HandleMove add_genus(ComponentId a);
    static HandleMove split(ComponentId a, int left_genus, int right_genus,
                            ComponentId out_left, ComponentId out_right);
    static HandleMove drop_genus(ComponentId a);
};

enum class NormalForm { Morse, SubmersionThenMorse, MorseThenMorse, FoldThenHeight };

const char* normal_form_name(NormalForm tag);

struct SingularPoint {
    int index = 1; // 1 for a 1-handle, 2 for a 2-handle
    NormalForm tag = NormalForm::Morse;
};

/// Combinatorial witness of the 3-dimensional piece between two surface
/// collections: an ordered handle schedule with Euler bookkeeping.
struct CobordismCertificate {
    SurfaceCollection incoming;
    SurfaceCollection outgoing;
    std::vector<HandleMove> schedule;
    int n1 = 0;
    int n2 = 0;
    int chi = 0;
    Rational singular_value;
    std::vector<SingularPoint> singular_points;
};

/// Sum of 2 - 2g over the components.
int euler_characteristic(const SurfaceCollection& s);

SurfaceCollection apply_handle(const SurfaceCollection& s, const HandleMove& move);

/// Plans a canonical handle schedule from S to T in four phases:
/// drop all genus, join to one sphere, split into |T| spheres, regrow the
/// target genera. A sphere-to-sphere plan gets the extra AddGenus/DropGenus
/// pair so the piece always carries a singular point. The outgoing
/// components are listed in the order of T's components (ascending id).
CobordismCertificate plan_cobordism(const SurfaceCollection& s, const SurfaceCollection& t,
                                    const Rational& value);

/// chi(incoming) - n1 + n2; the chi of the modeled cobordism.
int certificate_chi(const CobordismCertificate& cert);

} // namespace reebforge
