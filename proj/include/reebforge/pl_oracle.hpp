#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "reebforge/rational.hpp"
#include "reebforge/reeb_sweep.hpp"

namespace reebforge {

struct MeshVertex {
    double x = 0, y = 0, z = 0;
    Rational value; // scalar field, exact
};

/// Triangulated closed connected orientable surface with an exact scalar
/// per vertex. Ties between scalar values are broken symbolically by
/// vertex index, so every sweep is generic.
struct SimplicialSurface {
    std::vector<MeshVertex> vertices;
    std::vector<std::array<int, 3>> triangles;
};

/// Parses an ASCII OFF mesh; the scalar field is the z coordinate unless a
/// sidecar values text (one rational/decimal per vertex line) is supplied.
/// Validates that the mesh is a closed connected orientable surface.
SimplicialSurface load_off(std::string_view text);
SimplicialSurface load_off(std::string_view text, std::string_view sidecar_values);

/// V - E + F.
int euler_from_mesh(const SimplicialSurface& s);

/// Reeb graph of the PL scalar field: vertices at critical mesh vertices
/// (classified by lower/upper link component counts), edges from contour
/// classes tracked across consecutive levels by shared triangles. Edge
/// genus is 0 throughout; level sets of surface functions are circles.
ReebGraph reeb_graph_pl(const SimplicialSurface& s);

} // namespace reebforge
