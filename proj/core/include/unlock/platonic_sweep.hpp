#pragma once

#include <string>
#include <vector>

#include "unlock/cylinders.hpp"

namespace unlock {

/// The dual Platonic pairs of the delta-process: tetrahedron/tetrahedron,
/// octahedron/cube, icosahedron/dodecahedron. The configuration is built from
/// the edges of the first solid of the pair (6 / 12 / 30 lines).
enum class DualPair { TT, OC, ID };

DualPair dual_pair_from_name(const std::string& name);
std::string dual_pair_name(DualPair p);
Solid base_solid(DualPair p);

struct SweepCurve {
    std::vector<double> delta;  // strictly increasing
    std::vector<double> r;      // r >= 0
};

/// One tangent line per edge of the base solid, each rotated by delta about
/// the diameter through its edge midpoint. Equivariant under the solid's
/// rotation group by construction.
CylinderConfig delta_config(DualPair pair, double delta);

/// r(delta) = common radius of delta_config, on a uniform grid over [0, pi/2].
SweepCurve radius_curve(DualPair pair, int grid);

struct SweepMax {
    double delta_star{};
    double r_star{};
};

/// Grid scan plus high-accuracy 1-D refinement of r(delta) over [0, pi/2].
SweepMax maximize(DualPair pair);

/// The root near 0.694356 of 5t^6 - 80t^5 + 190t^3 - 4t^2 - 84t + 9,
/// bisected on [0.6, 0.8] to 1e-12. tan^2 of the I/D optimal angle.
double find_t0();

/// Intersection pattern at a zero of r(delta): connected components of the
/// line-intersection graph, as (component count, component size) pairs.
struct ZeroPattern {
    double delta{};
    std::vector<std::pair<int, int>> components;  // {count, size}, size descending
};

/// All interior zeros of r_I/D(delta) on (0, pi/2) with their intersection
/// patterns. `tol` bounds the accepted residual radius at a reported zero.
std::vector<ZeroPattern> id_zeros(double tol);

}  // namespace unlock
