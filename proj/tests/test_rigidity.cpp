#include <cmath>
#include <random>

#include "doctest.h"
#include "unlock/rigidity.hpp"

using namespace unlock;

namespace {

CylinderConfig rotated(const Rotation& r, const CylinderConfig& c) {
    CylinderConfig out;
    for (const TangentLine& g : c.generatrices)
        out.generatrices.emplace_back(UnitVec3::of(r * g.point().vec()),
                                      UnitVec3::of(r * g.direction().vec()));
    return out;
}

Matrix diag2(double a, double b) {
    Matrix m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

TEST_CASE("Chart round-trips its base configuration") {
    const Chart chart(o6_config());
    CHECK(chart.dim() == 18);

    const std::vector<double> zero(chart.dim(), 0.0);
    const CylinderConfig at0 = chart.at(zero);
    for (int k = 0; k < 6; ++k) {
        CHECK(norm(at0.generatrices[k].point().vec() -
                   chart.base().generatrices[k].point().vec()) < 1e-15);
        CHECK(norm(at0.generatrices[k].direction().vec() -
                   chart.base().generatrices[k].direction().vec()) < 1e-15);
    }

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(-0.05, 0.05);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> coords(chart.dim());
        for (double& c : coords) c = d(rng);
        const std::vector<double> back = chart.coords_of(chart.at(coords));
        for (int i = 0; i < chart.dim(); ++i) CHECK(std::abs(back[i] - coords[i]) < 1e-9);
    }
}

TEST_CASE("rotation generators are tangent to the constraint set") {
    const Chart chart(o6_config());
    const auto active = active_constraints(chart.base(), 1e-6);
    REQUIRE(active.size() == 12);
    const Matrix g = constraint_gradients(chart, active, ConstraintFamily::PairwiseRadius);
    REQUIRE(g.rows() == 12);
    REQUIRE(g.cols() == 18);

    // moving along a global rotation changes no pairwise radius: every
    // gradient row is orthogonal to every generator column
    const Matrix gens = chart.rotation_generators();
    REQUIRE(gens.cols() == 3);
    for (int row = 0; row < g.rows(); ++row)
        for (int col = 0; col < gens.cols(); ++col) {
            double s = 0.0;
            for (int i = 0; i < g.cols(); ++i) s += g(row, i) * gens(i, col);
            CHECK(std::abs(s) < 1e-6);
        }
}

TEST_CASE("check_negative_definite on explicit 2x2 forms") {
    const auto [nd, mx] = check_negative_definite(diag2(-1.0, -2.0));
    CHECK(nd);
    CHECK(mx == doctest::Approx(-1.0));
    const auto [neg, top] = check_negative_definite(diag2(-1.0, 1.0));
    CHECK_FALSE(neg);
    CHECK(top == doctest::Approx(1.0));
}

TEST_CASE("check_system_infeasible on synthetic forms") {
    SUBCASE("x^2 - y^2 together with its negation is infeasible") {
        RestrictedForm f1{diag2(1.0, -1.0), 1.0};
        RestrictedForm f2{diag2(-1.0, 1.0), 1.0};
        const InfeasibilityResult r = check_system_infeasible({f1, f2}, 200, 0);
        CHECK(r.infeasible);
        CHECK(std::abs(r.max_min) < 1e-6);
    }
    SUBCASE("a single indefinite form is feasible") {
        RestrictedForm f{diag2(1.0, -1.0), 1.0};
        const InfeasibilityResult r = check_system_infeasible({f}, 200, 0);
        CHECK_FALSE(r.infeasible);
        CHECK(r.max_min == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("convex_dependencies on synthetic gradients") {
    SUBCASE("opposite rows have the balanced dependence") {
        Matrix g(2, 2);
        g(0, 0) = 1.0;
        g(1, 0) = -1.0;
        const auto deps = convex_dependencies(g);
        REQUIRE(deps.size() == 1);
        CHECK(deps[0].weights[0] == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(deps[0].weights[1] == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(deps[0].residual < 1e-9);
    }
    SUBCASE("independent rows have none") {
        Matrix g(2, 2);
        g(0, 0) = 1.0;
        g(1, 1) = 1.0;
        CHECK(convex_dependencies(g).empty());
    }
}

TEST_CASE("a slightly perturbed configuration loses its dependencies") {
    CylinderConfig c = o6_config();
    // nudge one tangent point: the active set shrinks and the remaining
    // gradients are in general position
    const Rotation r(UnitVec3{0, 0, 1}, 5e-3);
    c.generatrices[0] = TangentLine(UnitVec3::of(r * c.generatrices[0].point().vec()),
                                    UnitVec3::of(r * c.generatrices[0].direction().vec()));
    const Chart chart(c);
    const auto active = active_constraints(c, 1e-6);
    CHECK(active.size() < 12);
    const Matrix g = constraint_gradients(chart, active, ConstraintFamily::PairwiseRadius);
    CHECK(convex_dependencies(g).empty());
}

TEST_CASE("rigidity verdict is invariant under global rotation") {
    std::mt19937 rng(29);
    std::normal_distribution<double> n;
    const RigidityCertificate base = rigidity_report(o6_config());
    REQUIRE(base.verdict == Verdict::SystemInfeasible);
    const Rotation r(UnitVec3::of({n(rng), n(rng), n(rng)}), 1.234);
    const RigidityCertificate rot = rigidity_report(rotated(r, o6_config()));
    CHECK(rot.verdict == base.verdict);
    CHECK(rot.primary.active.size() == base.primary.active.size());
    CHECK(rot.primary.dependencies.size() == base.primary.dependencies.size());
    CHECK(rot.primary.dim_e == base.primary.dim_e);
}
