#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "unlock/cylinders.hpp"
#include "unlock/platonic_sweep.hpp"

using namespace unlock;

namespace {

TangentLine equator_north(double lon) {
    return {UnitVec3{std::cos(lon), std::sin(lon), 0.0}, UnitVec3{0, 0, 1}};
}

TangentLine rotated(const Rotation& r, const TangentLine& g) {
    return {UnitVec3::of(r * g.point().vec()), UnitVec3::of(r * g.direction().vec())};
}

double axis_gap(const TangentLine& a, const TangentLine& b, double r) {
    return line_distance(axis_at_radius(a, r), axis_at_radius(b, r)) - 2.0 * r;
}

}  // namespace

TEST_CASE("axis_at_radius") {
    const TangentLine g(UnitVec3{1, 0, 0}, UnitVec3{0, 0, 1});
    const Line a = axis_at_radius(g, 0.5);
    CHECK(norm(a.point - Vec3{1.5, 0, 0}) < 1e-15);
    CHECK(std::abs(std::abs(dot(a.direction, g.direction())) - 1.0) < 1e-15);
    // the axis keeps distance 1 + r from the origin and stays parallel to g
    for (double r : {0.0, 0.25, 2.0, 17.0}) {
        const Line ar = axis_at_radius(g, r);
        CHECK(std::abs(line_distance(ar, Line{Vec3{0, 0, 0}, UnitVec3{0, 0, 1}}) - (1.0 + r)) <
              1e-12);
    }
}

TEST_CASE("pairwise_max_radius basics") {
    SUBCASE("adjacent c6 generatrices give radius 1") {
        const double r = pairwise_max_radius(equator_north(0.0), equator_north(M_PI / 3)).value();
        CHECK(r == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("antipodal parallel generatrices never touch") {
        CHECK(pairwise_max_radius(equator_north(0.0), equator_north(M_PI)).is_unbounded());
    }
    SUBCASE("crossing generatrices give 0") {
        const TangentLine a(UnitVec3{1, 0, 0}, UnitVec3{0, 0, 1});
        const TangentLine b(UnitVec3{1, 0, 0}, UnitVec3{0, 1, 0});
        CHECK(pairwise_max_radius(a, b).value() == doctest::Approx(0.0));
    }
    SUBCASE("symmetry and sign flips") {
        std::mt19937 rng(7);
        std::normal_distribution<double> n;
        for (int k = 0; k < 30; ++k) {
            const UnitVec3 u = UnitVec3::of({n(rng), n(rng), n(rng)});
            const UnitVec3 u2 = UnitVec3::of({n(rng), n(rng), n(rng)});
            const Vec3 w{n(rng), n(rng), n(rng)};
            const UnitVec3 t = UnitVec3::of(cross(u.vec(), w));
            const UnitVec3 t2 = UnitVec3::of(cross(u2.vec(), w));
            const TangentLine a(u, t), b(u2, t2);
            const MaxRadius ab = pairwise_max_radius(a, b);
            const MaxRadius ba = pairwise_max_radius(b, a);
            const MaxRadius flipped = pairwise_max_radius(TangentLine(u, -t), b);
            if (ab.is_unbounded()) {
                CHECK(ba.is_unbounded());
                CHECK(flipped.is_unbounded());
            } else {
                CHECK(std::abs(ab.value() - ba.value()) < 1e-12);
                CHECK(std::abs(ab.value() - flipped.value()) < 1e-12);
                // root residual: the axis gap vanishes at the returned radius
                CHECK(std::abs(axis_gap(a, b, ab.value())) < 1e-9);
            }
        }
    }
}

TEST_CASE("pairwise_max_radius rotation invariance") {
    std::mt19937 rng(11);
    std::normal_distribution<double> n;
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    const TangentLine a = equator_north(0.2), b = equator_north(1.3);
    const double base = pairwise_max_radius(a, b).value();
    for (int k = 0; k < 25; ++k) {
        const Rotation r(UnitVec3::of({n(rng), n(rng), n(rng)}), ang(rng));
        const double v = pairwise_max_radius(rotated(r, a), rotated(r, b)).value();
        CHECK(std::abs(v - base) < 1e-10);
    }
}

TEST_CASE("common_radius of the builtin configurations") {
    CHECK(common_radius(c6_config()).value() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(common_radius(o6_config()).value() == doctest::Approx(1.0).epsilon(1e-9));
    // min property: no pair touches before the common radius
    const CylinderConfig o6 = o6_config();
    const double rc = common_radius(o6).value();
    for (int i = 0; i < o6.size(); ++i)
        for (int j = i + 1; j < o6.size(); ++j) {
            const MaxRadius rij = pairwise_max_radius(o6.generatrices[i], o6.generatrices[j]);
            if (!rij.is_unbounded()) CHECK(rij.value() >= rc - 1e-9);
        }
}

TEST_CASE("contact graphs of c6 and o6") {
    CHECK(contact_graph(c6_config(), 1e-6).pairs.size() == 6);

    const CylinderConfig o6 = o6_config();
    const ContactGraph g = contact_graph(o6, 1e-6);
    CHECK(g.pairs.size() == 12);
    // tangent points sit at octahedron vertices: pairwise dots are 0 or -1
    std::multiset<int> spectrum;
    for (int i = 0; i < o6.size(); ++i)
        for (int j = i + 1; j < o6.size(); ++j) {
            const double d = dot(o6.generatrices[i].point(), o6.generatrices[j].point());
            CHECK((std::abs(d) < 1e-9 || std::abs(d + 1.0) < 1e-9));
            spectrum.insert(d > -0.5 ? 0 : -1);
        }
    CHECK(spectrum.count(0) == 12);
    CHECK(spectrum.count(-1) == 3);
}

TEST_CASE("contact degrees of the sweep maximizers") {
    const CylinderConfig oc = delta_config(DualPair::OC, maximize(DualPair::OC).delta_star);
    const ContactGraph goc = contact_graph(oc, 1e-6);
    std::vector<int> deg(oc.size(), 0);
    for (auto [i, j] : goc.pairs) ++deg[i], ++deg[j];
    for (int d : deg) CHECK(d == 4);

    const CylinderConfig id = delta_config(DualPair::ID, maximize(DualPair::ID).delta_star);
    const ContactGraph gid = contact_graph(id, 1e-6);
    std::vector<int> degi(id.size(), 0);
    for (auto [i, j] : gid.pairs) ++degi[i], ++degi[j];
    for (int d : degi) CHECK(d == 8);
}

TEST_CASE("is_pure_geodetic") {
    const std::optional<Rational> half = is_pure_geodetic(M_PI / 4, 100, 1e-9);
    REQUIRE(half.has_value());
    CHECK(half->p == 1);
    CHECK(half->q == 2);

    const std::optional<Rational> threequarter = is_pure_geodetic(M_PI / 3, 100, 1e-9);
    REQUIRE(threequarter.has_value());
    CHECK(threequarter->p == 3);
    CHECK(threequarter->q == 4);

    // sin^2(arctan(3^(1/4)/sqrt(2))) = sqrt(3)/(2+sqrt(3)) is irrational
    const double irr = std::atan(std::pow(3.0, 0.25) / std::sqrt(2.0));
    CHECK_FALSE(is_pure_geodetic(irr, 1000000, 1e-12).has_value());
}
