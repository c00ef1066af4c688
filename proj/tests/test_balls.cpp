#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "unlock/balls.hpp"

using namespace unlock;

namespace {

// independent oracle: largest rho with all center distances >= 2 rho, by
// bisection on the explicit pairwise constraint
double brute_force_max_radius(const std::vector<UnitVec3>& dirs) {
    auto feasible = [&](double rho) {
        for (size_t i = 0; i < dirs.size(); ++i)
            for (size_t j = i + 1; j < dirs.size(); ++j) {
                const Vec3 ci = dirs[i].vec() * (1.0 + rho);
                const Vec3 cj = dirs[j].vec() * (1.0 + rho);
                if (norm(ci - cj) < 2.0 * rho) return false;
            }
        return true;
    };
    double lo = 0.0, hi = 64.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    return lo;
}

std::vector<int> degree_sequence(const BallCluster& c) {
    std::vector<int> deg(c.size(), 0);
    for (auto [i, j] : kissing_graph(c).pairs) {
        ++deg[i];
        ++deg[j];
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

double min_gap(const BallCluster& c) {
    double g = 1e30;
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j)
            g = std::min(g, norm(c.center(i) - c.center(j)) - 2.0 * c.rho);
    return g;
}

// symmetric set distance between the center sets of two clusters
double center_set_distance(const BallCluster& a, const BallCluster& b) {
    double worst = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        double best = 1e30;
        for (int j = 0; j < b.size(); ++j) best = std::min(best, norm(a.center(i) - b.center(j)));
        worst = std::max(worst, best);
    }
    return worst;
}

std::vector<UnitVec3> octahedron_dirs() {
    return {UnitVec3{1, 0, 0}, UnitVec3{-1, 0, 0}, UnitVec3{0, 1, 0},
            UnitVec3{0, -1, 0}, UnitVec3{0, 0, 1}, UnitVec3{0, 0, -1}};
}

std::vector<UnitVec3> icosahedron_dirs() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<UnitVec3> v;
    for (double a : {1.0, -1.0})
        for (double b : {phi, -phi}) {
            v.push_back(UnitVec3::of({0, a, b}));
            v.push_back(UnitVec3::of({a, b, 0}));
            v.push_back(UnitVec3::of({b, 0, a}));
        }
    return v;
}

}  // namespace

TEST_CASE("fcc_config geometry") {
    const BallCluster c = fcc_config();
    REQUIRE(c.size() == 12);
    CHECK(kissing_graph(c).pairs.size() == 24);
    double min_dist = 1e30;
    for (int k = 0; k < c.size(); ++k) {
        CHECK(norm(c.center(k)) == doctest::Approx(2.0).epsilon(1e-12));
        for (int j = k + 1; j < c.size(); ++j)
            min_dist = std::min(min_dist, norm(c.center(k) - c.center(j)));
    }
    CHECK(min_dist == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("hcp_config geometry") {
    const BallCluster c = hcp_config();
    REQUIRE(c.size() == 12);
    CHECK(kissing_graph(c).pairs.size() == 24);
    for (int k = 0; k < c.size(); ++k)
        CHECK(norm(c.center(k)) == doctest::Approx(2.0).epsilon(1e-12));
    // both kissing graphs are 4-regular
    const std::vector<int> four(12, 4);
    CHECK(degree_sequence(c) == four);
    CHECK(degree_sequence(fcc_config()) == four);
}

TEST_CASE("max_common_radius closed forms and oracle") {
    SUBCASE("icosahedron blow-up") {
        const double closed = 1.0 / (std::sqrt((5.0 + std::sqrt(5.0)) / 2.0) - 1.0);
        const double r = max_common_radius(icosahedron_dirs()).value();
        CHECK(std::abs(r - closed) < 1e-10);
        CHECK(std::abs(r - 1.10851) < 1e-5);
        CHECK(kissing_count_at_max(icosahedron_dirs()) == 30);
    }
    SUBCASE("cuboctahedron stays at 1") {
        const double r = max_common_radius(fcc_config().directions).value();
        CHECK(r == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(kissing_count_at_max(fcc_config().directions) == 24);
    }
    SUBCASE("octahedron against brute force") {
        const double r = max_common_radius(octahedron_dirs()).value();
        CHECK(r == doctest::Approx(std::sqrt(2.0) + 1.0).epsilon(1e-10));
        CHECK(std::abs(r - brute_force_max_radius(octahedron_dirs())) < 1e-9);
    }
    SUBCASE("icosahedron against brute force") {
        const double r = max_common_radius(icosahedron_dirs()).value();
        CHECK(std::abs(r - brute_force_max_radius(icosahedron_dirs())) < 1e-9);
    }
    SUBCASE("two orthogonal directions") {
        const std::vector<UnitVec3> two{UnitVec3{1, 0, 0}, UnitVec3{0, 1, 0}};
        CHECK(kissing_count_at_max(two) == 1);
    }
    SUBCASE("antipodal pair is unbounded") {
        CHECK(max_common_radius({UnitVec3{0, 0, 1}, UnitVec3{0, 0, -1}}).is_unbounded());
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(max_common_radius({UnitVec3{1, 0, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(max_common_radius({UnitVec3{1, 0, 0}, UnitVec3{1, 0, 0}}),
                        std::invalid_argument);
    }
}

TEST_CASE("max_common_radius rotation invariance") {
    std::mt19937 rng(23);
    std::normal_distribution<double> n;
    std::uniform_real_distribution<double> a(0.0, 2.0 * M_PI);
    const double base = max_common_radius(icosahedron_dirs()).value();
    for (int i = 0; i < 20; ++i) {
        const Rotation r(UnitVec3::of({n(rng), n(rng), n(rng)}), a(rng));
        std::vector<UnitVec3> rot;
        for (const UnitVec3& d : icosahedron_dirs()) rot.push_back(UnitVec3::of(r * d.vec()));
        CHECK(std::abs(max_common_radius(rot).value() - base) < 1e-12);
    }
}

TEST_CASE("moves reproduce the base at t = 0 and open gaps at t = 0.1") {
    CHECK(center_set_distance(fcc_move(0.0), fcc_config()) < 1e-15);
    CHECK(center_set_distance(hcp_move(0.0), hcp_config()) < 1e-15);
    // no overlap anywhere, and the 9 non-preserved contacts have opened
    CHECK(min_gap(fcc_move(0.1)) > -1e-9);
    CHECK(min_gap(hcp_move(0.1)) > -1e-9);
    CHECK(kissing_graph(fcc_move(0.1)).pairs.size() == 15);
    CHECK(kissing_graph(hcp_move(0.1)).pairs.size() == 15);
}

TEST_CASE("moves keep every center at norm 2") {
    for (double t = -0.3; t <= 0.3001; t += 0.05) {
        const BallCluster f = fcc_move(t), h = hcp_move(t);
        for (int k = 0; k < 12; ++k) {
            CHECK(std::abs(norm(f.center(k)) - 2.0) < 1e-12);
            CHECK(std::abs(norm(h.center(k)) - 2.0) < 1e-12);
        }
    }
}

TEST_CASE("verify_unlock verdicts") {
    const UnlockReport fcc = verify_unlock(fcc_ball_move(), 0.3, 256);
    const UnlockReport hcp = verify_unlock(hcp_ball_move(), 0.3, 256);
    const UnlockReport bad = verify_unlock(broken_fcc_move(), 0.3, 256);
    CHECK(fcc.pass);
    CHECK(hcp.pass);
    CHECK_FALSE(bad.pass);
    CHECK(bad.first_fail_t > 0.0);

    // sampled monotonicity of the separating gap on [0, 0.15]
    for (const UnlockReport* rep : {&fcc, &hcp}) {
        for (size_t i = 1; i < rep->t.size(); ++i)
            if (rep->t[i] <= 0.15) CHECK(rep->min_gap_free[i] > rep->min_gap_free[i - 1]);
    }
}

TEST_CASE("moves commute with the 120-degree vertical rotation") {
    const Rotation r(UnitVec3{0, 0, 1}, 2.0 * M_PI / 3.0);
    for (auto move : {fcc_move, hcp_move}) {
        for (double t : {0.05, 0.15, 0.3}) {
            const BallCluster moved = move(t);
            BallCluster rotated_moved = moved;
            for (auto& d : rotated_moved.directions) d = UnitVec3::of(r * d.vec());
            // the base cluster is invariant under r, so rotating the moved
            // cluster must reproduce the same center set up to relabeling
            CHECK(center_set_distance(rotated_moved, moved) < 1e-9);
        }
    }
}
