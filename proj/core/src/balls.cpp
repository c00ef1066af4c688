#include "unlock/balls.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace unlock {

namespace {

void ring(std::vector<UnitVec3>& out, std::initializer_list<double> lons_deg,
          double cyl_radius, double z) {
    const double n = std::sqrt(cyl_radius * cyl_radius + z * z);
    for (double ld : lons_deg) {
        const double lon = ld * M_PI / 180.0;
        out.push_back(UnitVec3::of(
            {cyl_radius * std::cos(lon) / n, cyl_radius * std::sin(lon) / n, z / n}));
    }
}

// top/bottom rings of the cuboctahedron / orthobicupola at center norm 2
const double kRingRadius = 2.0 / std::sqrt(3.0);
const double kRingHeight = 2.0 * std::sqrt(2.0 / 3.0);

}  // namespace

BallCluster fcc_config() {
    BallCluster c;
    ring(c.directions, {0, 60, 120, 180, 240, 300}, 2.0, 0.0);       // 0..5 equator
    ring(c.directions, {30, 150, 270}, kRingRadius, kRingHeight);    // 6..8 top
    ring(c.directions, {90, 210, 330}, kRingRadius, -kRingHeight);   // 9..11 bottom
    return c;
}

BallCluster hcp_config() {
    BallCluster c;
    ring(c.directions, {0, 60, 120, 180, 240, 300}, 2.0, 0.0);
    ring(c.directions, {30, 150, 270}, kRingRadius, kRingHeight);
    ring(c.directions, {30, 150, 270}, kRingRadius, -kRingHeight);   // aligned bottom
    return c;
}

KissingGraph kissing_graph(const BallCluster& c, double tol) {
    KissingGraph g;
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j)
            if (std::abs(norm(c.center(i) - c.center(j)) - 2.0 * c.rho) < tol)
                g.pairs.emplace_back(i, j);
    return g;
}

MaxRadius max_common_radius(const std::vector<UnitVec3>& directions) {
    const int n = static_cast<int>(directions.size());
    if (n < 2) throw std::invalid_argument("max_common_radius: need at least 2 directions");
    double cos_max = -1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            cos_max = std::max(cos_max, dot(directions[i], directions[j]));
    if (cos_max > 1.0 - 1e-12)
        throw std::invalid_argument("max_common_radius: duplicate directions");
    const double theta_min = std::acos(std::clamp(cos_max, -1.0, 1.0));
    const double s = std::sin(theta_min / 2.0);
    if (s >= 1.0 - 1e-15) return MaxRadius::unbounded();  // two antipodal points
    return MaxRadius::bounded(s / (1.0 - s));
}

int kissing_count_at_max(const std::vector<UnitVec3>& directions) {
    const MaxRadius r = max_common_radius(directions);
    if (r.is_unbounded()) return 0;
    BallCluster c{directions, r.value()};
    return static_cast<int>(kissing_graph(c, 1e-9).pairs.size());
}

namespace {

// Rigid groups of the FCC move: equatorial pairs {0,1},{2,3},{4,5} pivoting
// about top balls 6,7,8. Sign fixed so that the first ball of each pair goes
// below the equator (the sweep tests confirm this sense separates the
// non-preserved contacts; the opposite sense works symmetrically).
BallCluster apply_fcc_move(double t, int flipped_group) {
    if (std::abs(t) > M_PI / 2.0 + 1e-12)
        throw std::invalid_argument("fcc_move: |t| must be <= pi/2");
    BallCluster base = fcc_config();
    if (t == 0.0 && flipped_group < 0) return base;
    BallCluster out = base;
    const int pairs[3][2] = {{0, 1}, {2, 3}, {4, 5}};
    const int pivot[3] = {6, 7, 8};
    for (int p = 0; p < 3; ++p) {
        const double sense = (p == flipped_group) ? -1.0 : 1.0;
        const Rotation r(base.directions[pivot[p]], sense * t);
        for (int m : pairs[p]) out.directions[m] = r * base.directions[m];
    }
    return out;
}

}  // namespace

BallCluster fcc_move(double t) { return apply_fcc_move(t, -1); }

BallCluster hcp_move(double t) {
    if (std::abs(t) > M_PI / 2.0 + 1e-12)
        throw std::invalid_argument("hcp_move: |t| must be <= pi/2");
    BallCluster base = hcp_config();
    if (t == 0.0) return base;
    BallCluster out = base;
    // rhombi {top, two adjacent equatorial, aligned bottom}
    const int rhombus[3][4] = {{6, 0, 1, 9}, {7, 2, 3, 10}, {8, 4, 5, 11}};
    for (const auto& rh : rhombus) {
        const UnitVec3 axis =
            UnitVec3::of(base.directions[rh[1]].vec() + base.directions[rh[2]].vec());
        const Rotation r(axis, t);
        for (int m : rh) out.directions[m] = r * base.directions[m];
    }
    return out;
}

BallMove fcc_ball_move() { return {"fcc", [](double t) { return fcc_move(t); }}; }
BallMove hcp_ball_move() { return {"hcp", [](double t) { return hcp_move(t); }}; }
BallMove broken_fcc_move() {
    return {"fcc-broken", [](double t) { return apply_fcc_move(t, 1); }};
}

UnlockReport verify_unlock(const BallMove& move, double t_max, int steps) {
    if (steps < 2) throw std::invalid_argument("verify_unlock: steps must be >= 2");
    if (!(t_max > 0.0)) throw std::invalid_argument("verify_unlock: t_max must be > 0");

    UnlockReport rep;
    rep.move_id = move.id;
    rep.t_max = t_max;
    rep.steps = steps;

    const BallCluster base = move.at(0.0);
    const int n = base.size();
    const double two_rho = 2.0 * base.rho;

    std::vector<std::vector<Vec3>> centers;
    for (int s = 1; s <= steps; ++s) {
        const double t = t_max * s / steps;
        rep.t.push_back(t);
        const BallCluster c = move.at(t);
        std::vector<Vec3> cs;
        for (int k = 0; k < n; ++k) cs.push_back(c.center(k));
        centers.push_back(std::move(cs));
    }

    // preserved pairs: initial kissing pairs whose distance never changes
    std::set<std::pair<int, int>> preserved;
    for (const auto& [i, j] : kissing_graph(base).pairs) {
        bool constant = true;
        for (const auto& cs : centers)
            if (std::abs(norm(cs[i] - cs[j]) - two_rho) > 1e-12) { constant = false; break; }
        if (constant) preserved.insert({i, j});
    }
    rep.preserved_pairs.assign(preserved.begin(), preserved.end());

    rep.pass = true;
    for (size_t s = 0; s < centers.size(); ++s) {
        double gap_free = 1e18, gap_all = 1e18;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double gap = norm(centers[s][i] - centers[s][j]) - two_rho;
                gap_all = std::min(gap_all, gap);
                if (!preserved.count({i, j})) gap_free = std::min(gap_free, gap);
            }
        rep.min_gap_free.push_back(gap_free);
        rep.min_gap_all.push_back(gap_all);
        // every contact the move is supposed to open must be strictly open,
        // and nothing may overlap
        if (!(gap_free > 0.0) || gap_all < -1e-9) {
            if (rep.pass) rep.first_fail_t = rep.t[s];
            rep.pass = false;
        }
    }
    return rep;
}

}  // namespace unlock
