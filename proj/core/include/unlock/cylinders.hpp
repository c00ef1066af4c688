#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unlock/geom3.hpp"
#include "unlock/max_radius.hpp"

namespace unlock {

/// An ordered set of tangent generatrices; together with a common radius it
/// describes a set of equal cylinders tangent to the unit ball.
struct CylinderConfig {
    std::vector<TangentLine> generatrices;

    int size() const { return static_cast<int>(generatrices.size()); }
};

struct ContactGraph {
    std::vector<std::pair<int, int>> pairs;  // i < j, deduplicated
};

/// Axis of the cylinder of radius r whose generatrix is g: parallel to g at
/// distance r on the outward side, through (1+r)*u.
Line axis_at_radius(const TangentLine& g, double r);

/// Smallest r >= 0 at which the two cylinders of common radius r with
/// generatrices g1, g2 come into contact: first nonnegative root of
/// f(r) = dist(axis1(r), axis2(r)) - 2r, by bracketing scan (step 0.05,
/// cap 64) plus bisection. Unbounded if f stays positive on [0, 64].
MaxRadius pairwise_max_radius(const TangentLine& g1, const TangentLine& g2);

/// Min of pairwise_max_radius over all pairs; unbounded only if every pair is.
MaxRadius common_radius(const CylinderConfig& c);

/// Six generatrices with tangent points on the equator at longitudes k*60deg,
/// all directed north.
CylinderConfig c6_config();

/// The delta-process on the tetrahedron at delta = pi/4: six generatrices with
/// tangent points at the octahedron vertices, common radius 1.
CylinderConfig o6_config();

/// Pairs whose pairwise max radius is within tol of the common radius.
ContactGraph contact_graph(const CylinderConfig& c, double tol);

/// Best rational approximation p/q (q <= qmax) of sin^2(angle), via continued
/// fraction convergents; nullopt if no convergent comes within tol.
struct Rational {
    long long p, q;
};
std::optional<Rational> is_pure_geodetic(double angle, long long qmax, double tol);

}  // namespace unlock
