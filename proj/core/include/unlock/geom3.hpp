#pragma once

#include <string>
#include <vector>

#include "unlock/vec3.hpp"

namespace unlock {

/// Infinite line through `point` with unit `direction`. The direction sign is
/// not semantic: Line(p, d) and Line(p, -d) denote the same line.
struct Line {
    Vec3 point;
    UnitVec3 direction;
};

/// A line tangent to the unit sphere: tangent point u (on the sphere) and
/// tangent direction t, with u.t = 0. The generatrix of a cylinder.
class TangentLine {
  public:
    TangentLine(const UnitVec3& tangent_point, const UnitVec3& direction)
        : u_(tangent_point), t_(direction) {
        if (std::abs(dot(u_, t_)) > 1e-12)
            throw std::invalid_argument("TangentLine: direction not tangent to the sphere");
    }

    const UnitVec3& point() const { return u_; }
    const UnitVec3& direction() const { return t_; }
    Line as_line() const { return {u_.vec(), t_}; }

  private:
    UnitVec3 u_, t_;
};

/// Minimal Euclidean distance between two full lines. Handles the parallel
/// case by point-to-line distance.
double line_distance(const Line& a, const Line& b);
double line_distance(const TangentLine& a, const TangentLine& b);

/// Lines are "the same" when their distance is < 1e-9 and |t1.t2| > 1 - 1e-9.
bool same_line(const Line& a, const Line& b);

/// Rotate the direction of g by `delta` about the diameter through its tangent
/// point, counterclockwise as seen from outside the sphere. The tangent point
/// does not move.
TangentLine rotate_line_about_radial_axis(const TangentLine& g, double delta);

enum class Solid { Tetrahedron, Cube, Octahedron, Icosahedron, Dodecahedron };

Solid solid_from_name(const std::string& name);
std::string solid_name(Solid s);

struct SolidEdge {
    UnitVec3 midpoint;   // normalized edge-midpoint direction
    UnitVec3 direction;  // edge direction (sign not semantic)
};

struct SolidEdgeData {
    Solid solid;
    std::vector<SolidEdge> edges;
};

/// Vertices of the solid, normalized to the unit sphere. Conventions:
/// tetrahedron (1,1,1),(1,-1,-1),(-1,1,-1),(-1,-1,1); cube (+-1,+-1,+-1);
/// octahedron +-e_i; icosahedron cyclic permutations of (0,+-1,+-phi);
/// dodecahedron as the icosahedron's face centers.
std::vector<UnitVec3> platonic_vertices(Solid s);

/// Edge list (midpoint direction + edge direction) of the solid. Edge counts:
/// tetra 6, cube 12, octa 12, icosa 30, dodeca 30.
SolidEdgeData platonic_edges(Solid s);

}  // namespace unlock
