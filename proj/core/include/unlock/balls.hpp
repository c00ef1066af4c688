#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "unlock/max_radius.hpp"
#include "unlock/vec3.hpp"

namespace unlock {

/// Equal balls of radius rho tangent to the central unit ball; ball k has its
/// center at (1 + rho) * directions[k].
struct BallCluster {
    std::vector<UnitVec3> directions;
    double rho{1.0};

    Vec3 center(int k) const { return directions[k].vec() * (1.0 + rho); }
    int size() const { return static_cast<int>(directions.size()); }
};

struct KissingGraph {
    std::vector<std::pair<int, int>> pairs;  // i < j, deduplicated
};

/// A one-parameter rolling move t -> BallCluster with at(0) the base cluster.
struct BallMove {
    std::string id;
    std::function<BallCluster(double)> at;
};

/// 12 unit balls at the vertices of the cuboctahedron (centers at norm 2):
/// equatorial hexagon at longitudes k*60deg, top triangle at 30/150/270,
/// bottom at 90/210/330 (staggered).
BallCluster fcc_config();

/// 12 unit balls at the vertices of the triangular orthobicupola: same equator
/// and top ring as FCC, bottom ring aligned with the top at 30/150/270.
BallCluster hcp_config();

/// Pairs of balls at center distance 2*rho (tolerance 1e-9).
KissingGraph kissing_graph(const BallCluster& c, double tol = 1e-9);

/// Maximal equal radius of balls tangent to the unit ball at the given fixed
/// spherical positions: s/(1-s) with s = sin(theta_min/2). Unbounded only for
/// two antipodal points.
MaxRadius max_common_radius(const std::vector<UnitVec3>& directions);

/// Number of kissing pairs at the maximal common radius.
int kissing_count_at_max(const std::vector<UnitVec3>& directions);

/// FCC unlocking move: top and bottom triangles fixed, the equatorial hexagon
/// split into 3 rigid pairs, each rolled by t about the axis through the
/// origin and its shared top ball. |t| <= pi/2.
BallCluster fcc_move(double t);

/// HCP unlocking move: 3 rhombi {top, two adjacent equatorial, aligned bottom},
/// each rolled by t about the axis through the origin and the midpoint of its
/// equatorial pair. |t| <= pi/2.
BallCluster hcp_move(double t);

BallMove fcc_ball_move();
BallMove hcp_ball_move();

/// Negative control: the FCC move with one rigid pair rotating in the
/// opposite sense. Collides for small t > 0.
BallMove broken_fcc_move();

/// Sweep of a ball move over (0, t_max]. A kissing pair whose distance stays
/// constant over the whole sweep (rigid-group or fixed-fixed contact) is
/// "preserved" and excluded from the separation check; the move is expected
/// to open every other contact.
struct UnlockReport {
    std::string move_id;
    double t_max{};
    int steps{};
    std::vector<double> t;             // sampled parameters, increasing
    std::vector<double> min_gap_free;  // min gap over non-preserved pairs
    std::vector<double> min_gap_all;   // min gap over all pairs
    std::vector<std::pair<int, int>> preserved_pairs;
    bool pass{};
    double first_fail_t{-1.0};
};

UnlockReport verify_unlock(const BallMove& move, double t_max, int steps);

}  // namespace unlock
