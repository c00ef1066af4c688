// Acceptance gate: one line per criterion, exit code = number of failures.
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "unlock/balls.hpp"
#include "unlock/cex.hpp"
#include "unlock/io.hpp"
#include "unlock/platonic_sweep.hpp"
#include "unlock/rigidity.hpp"
#include "unlock/unlockd3.hpp"

using namespace unlock;

namespace {

int failures = 0;

void report(int n, const std::string& label, bool ok, const std::string& detail) {
    std::printf("[%2d] %s: %s (%s)\n", n, label.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string num(double v) { return io::format_number(v); }

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

CylinderConfig rotated(const Rotation& r, const CylinderConfig& c) {
    CylinderConfig out;
    for (const TangentLine& g : c.generatrices)
        out.generatrices.emplace_back(UnitVec3::of(r * g.point().vec()),
                                      UnitVec3::of(r * g.direction().vec()));
    return out;
}

double line_set_distance(const CylinderConfig& a, const CylinderConfig& b) {
    double worst = 0.0;
    for (const TangentLine& ga : a.generatrices) {
        double best = 1e30;
        for (const TangentLine& gb : b.generatrices) {
            const double dp = norm(ga.point().vec() - gb.point().vec());
            const double dd = 1.0 - std::abs(dot(ga.direction(), gb.direction()));
            best = std::min(best, dp + dd);
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

int main() {
    // 1 & 2: record radius of the six-cylinder optimum
    const CmResult cm = find_cm();
    {
        const double target = (3.0 + std::sqrt(33.0)) / 8.0;
        report(1, "record radius (3+sqrt(33))/8", std::abs(cm.radius - target) < 1e-9,
               "r = " + num(cm.radius) + ", target = " + num(target) +
                   ", |diff| = " + num(std::abs(cm.radius - target)));
        report(2, "record exceeds 1.049659", cm.radius > 1.049659,
               "r = " + num(cm.radius) + " > 1.049659");
    }

    // 3: tetrahedral sweep maximum
    {
        const SweepMax m = maximize(DualPair::TT);
        report(3, "tetrahedral sweep max at (pi/4, 1)",
               std::abs(m.delta_star - M_PI / 4.0) < 1e-8 && std::abs(m.r_star - 1.0) < 1e-8,
               "delta* = " + num(m.delta_star) + ", r* = " + num(m.r_star));
    }

    // 4: octahedral sweep maximum against closed forms
    {
        const SweepMax m = maximize(DualPair::OC);
        const double delta_cf = std::atan(std::pow(3.0, 0.25) / std::sqrt(2.0));
        const double r_cf =
            (std::sqrt(3.0) - 1.0) / (1.0 + 2.0 * std::sqrt(2.0) - std::sqrt(3.0));
        report(4, "octahedral sweep max closed forms",
               std::abs(m.delta_star - delta_cf) < 1e-8 && std::abs(m.r_star - r_cf) < 1e-8,
               "delta* = " + num(m.delta_star) + " vs " + num(delta_cf) +
                   ", r* = " + num(m.r_star) + " vs " + num(r_cf));
    }

    // 5: icosahedral sweep maximum and the sextic root
    {
        const SweepMax m = maximize(DualPair::ID);
        const double t0 = find_t0();
        const double tan2 = std::tan(m.delta_star) * std::tan(m.delta_star);
        const bool ok = std::abs(m.r_star - 0.115558) < 1e-5 &&
                        std::abs(m.delta_star - 0.694707) < 1e-5 &&
                        std::abs(tan2 - t0) < 1e-6 && std::abs(t0 - 0.694356) < 1e-6;
        report(5, "icosahedral sweep max and sextic root", ok,
               "delta* = " + num(m.delta_star) + ", r* = " + num(m.r_star) +
                   ", tan^2(delta*) = " + num(tan2) + ", t0 = " + num(t0));
    }

    // 6: ball blow-up at the icosahedron
    {
        const auto dirs = icosahedron_dirs();
        const double r = max_common_radius(dirs).value();
        const double closed = 1.0 / (std::sqrt((5.0 + std::sqrt(5.0)) / 2.0) - 1.0);
        const int kiss = kissing_count_at_max(dirs);
        report(6, "icosahedral ball blow-up",
               std::abs(r - closed) < 1e-10 && std::abs(r - 1.10851) < 1e-5 && kiss == 30,
               "r = " + num(r) + ", closed form = " + num(closed) +
                   ", kissing = " + std::to_string(kiss));
    }

    // 7: kissing counts of the two 12-ball clusters
    {
        const size_t fcc = kissing_graph(fcc_config()).pairs.size();
        const size_t hcp = kissing_graph(hcp_config()).pairs.size();
        report(7, "FCC/HCP kissing counts", fcc == 24 && hcp == 24,
               "fcc = " + std::to_string(fcc) + ", hcp = " + std::to_string(hcp));
    }

    // 8: unlocking moves pass, broken control fails
    {
        const UnlockReport f = verify_unlock(fcc_ball_move(), 0.3, 256);
        const UnlockReport h = verify_unlock(hcp_ball_move(), 0.3, 256);
        const UnlockReport b = verify_unlock(broken_fcc_move(), 0.3, 256);
        report(8, "unlock verification", f.pass && h.pass && !b.pass,
               "fcc = " + std::string(f.pass ? "pass" : "fail") +
                   ", hcp = " + std::string(h.pass ? "pass" : "fail") +
                   ", control = " + std::string(b.pass ? "pass" : "fail") +
                   " (first_fail_t = " + num(b.first_fail_t) + ")");
    }

    // 9: second-order certificate at the record configuration
    {
        const RigidityCertificate cert = rigidity_report(cm.config);
        bool deps_ok = !cert.primary.dependencies.empty();
        for (const ConvexDependence& d : cert.primary.dependencies)
            deps_ok = deps_ok && d.residual < 1e-8;
        bool eig_ok = !cert.primary.form_max_eigenvalues.empty();
        double worst = -1e30;
        for (double e : cert.primary.form_max_eigenvalues) worst = std::max(worst, e);
        eig_ok = eig_ok && worst < -1e-8;
        report(9, "record configuration is negative definite",
               cert.verdict == Verdict::NegativeDefinite && deps_ok && eig_ok,
               "verdict = " + verdict_name(cert.verdict) +
                   ", max eig = " + num(worst) +
                   ", dim(E) = " + std::to_string(cert.primary.dim_e));
    }

    // 10: infeasibility certificate at the hexagonal-derived optimum
    {
        const CylinderConfig o6 = o6_config();
        const RigidityCertificate cert = rigidity_report(o6);
        const bool base_ok = cert.verdict == Verdict::SystemInfeasible &&
                             cert.primary.dependencies.size() == 3 &&
                             cert.primary.infeasibility.max_min <= 1e-8;

        // independent simplex-grid scan: no convex combination of the three
        // restricted forms is negative definite
        const Chart chart(o6);
        const auto active = active_constraints(o6, 1e-6);
        const Matrix grads =
            constraint_gradients(chart, active, ConstraintFamily::PairwiseRadius);
        const auto deps = convex_dependencies(grads);
        const KernelSubspace kernel = kernel_subspace(grads, chart);
        const auto forms = restricted_hessian_forms(chart, active, deps, kernel.basis,
                                                    ConstraintFamily::PairwiseRadius);
        bool grid_ok = forms.size() == 3;
        int grid_points = 0;
        const int n = 44;  // (n+1)(n+2)/2 = 1035 >= 1000 simplex points
        const int dim = forms.empty() ? 0 : forms[0].q.rows();
        for (int i = 0; grid_ok && i <= n; ++i)
            for (int j = 0; grid_ok && i + j <= n; ++j) {
                const double l1 = double(i) / n, l2 = double(j) / n, l3 = 1.0 - l1 - l2;
                Matrix q(dim, dim);
                for (int a = 0; a < dim; ++a)
                    for (int b = 0; b < dim; ++b)
                        q(a, b) = l1 * forms[0].q(a, b) + l2 * forms[1].q(a, b) +
                                  l3 * forms[2].q(a, b);
                grid_ok = grid_ok && !check_negative_definite(q).first;
                ++grid_points;
            }
        report(10, "hexagonal-derived optimum is system-infeasible",
               base_ok && grid_ok && grid_points >= 1000,
               "verdict = " + verdict_name(cert.verdict) +
                   ", dependencies = " + std::to_string(cert.primary.dependencies.size()) +
                   ", max-min = " + num(cert.primary.infeasibility.max_min) +
                   ", grid points without negative-definite combination = " +
                   std::to_string(grid_points));
    }

    // 11: interior zeros of the icosahedral sweep
    {
        const auto zeros = id_zeros(1e-9);
        const std::vector<std::vector<std::pair<int, int>>> expected = {
            {{10, 3}}, {{5, 6}}, {{6, 5}}};
        bool ok = zeros.size() == 3;
        std::string profile;
        for (size_t k = 0; k < zeros.size(); ++k) {
            if (ok && k < expected.size()) ok = zeros[k].components == expected[k];
            for (auto [c, s] : zeros[k].components)
                profile += "{" + std::to_string(c) + "x" + std::to_string(s) + "} ";
        }
        report(11, "icosahedral sweep zeros", ok,
               "count = " + std::to_string(zeros.size()) + ", profiles = " + profile);
    }

    // 12: flat-function counterexample probes
    {
        const cex::PathReport paths =
            cex::probe_analytic_paths(cex::random_paths(100, 4, 0));
        std::vector<double> grid;
        for (double x = 0.2; x > 1e-5; x *= 0.7) grid.push_back(x);
        const cex::BeakReport beak = cex::probe_beak(grid);
        const bool near_origin =
            !beak.spine.empty() && beak.spine.back().dist_to_origin < 1e-3 &&
            beak.spine.back().phi_positive;
        report(12, "analytic paths vanish while the beak spine stays positive",
               paths.pass && beak.all_spine_positive && beak.outside_points_vanish &&
                   near_origin,
               "paths = " + std::to_string(paths.probes.size()) +
                   ", all vanish = " + std::string(paths.pass ? "yes" : "no") +
                   ", closest positive point at distance " +
                   (beak.spine.empty() ? std::string("n/a")
                                       : num(beak.spine.back().dist_to_origin)));
    }

    // 13: compact property battery
    {
        std::mt19937 rng(101);
        std::normal_distribution<double> nd;
        std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
        bool ok = true;
        std::string why;

        // rotation invariance of the pairwise radius and the ball blow-up
        const CylinderConfig c6 = c6_config();
        const double base_pair =
            pairwise_max_radius(c6.generatrices[0], c6.generatrices[1]).value();
        const double base_ball = max_common_radius(icosahedron_dirs()).value();
        for (int k = 0; k < 10 && ok; ++k) {
            const Rotation r(UnitVec3::of({nd(rng), nd(rng), nd(rng)}), ang(rng));
            const CylinderConfig rc = rotated(r, c6);
            if (std::abs(pairwise_max_radius(rc.generatrices[0], rc.generatrices[1]).value() -
                         base_pair) > 1e-10) {
                ok = false;
                why = "pairwise radius not rotation invariant";
            }
            std::vector<UnitVec3> dirs;
            for (const UnitVec3& d : icosahedron_dirs()) dirs.push_back(UnitVec3::of(r * d.vec()));
            if (std::abs(max_common_radius(dirs).value() - base_ball) > 1e-10) {
                ok = false;
                why = "ball blow-up not rotation invariant";
            }
        }

        // root residual: the axis gap vanishes at the reported radius
        if (ok) {
            const double gap = line_distance(axis_at_radius(c6.generatrices[0], base_pair),
                                             axis_at_radius(c6.generatrices[1], base_pair)) -
                               2.0 * base_pair;
            if (std::abs(gap) > 1e-9) {
                ok = false;
                why = "root residual " + num(gap);
            }
        }

        // finite-difference stability: the gradient pipeline accepts o6
        if (ok) {
            try {
                const Chart chart(o6_config());
                const auto active = active_constraints(o6_config(), 1e-6);
                constraint_gradients(chart, active, ConstraintFamily::GeneratrixDistance);
            } catch (const std::exception& e) {
                ok = false;
                why = std::string("finite differences unstable: ") + e.what();
            }
        }

        // group equivariance of the sweep configurations
        if (ok) {
            const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
            const Rotation gens[] = {Rotation(UnitVec3::of({1, 1, 1}), 2.0 * M_PI / 3.0),
                                     Rotation(UnitVec3{0, 0, 1}, M_PI / 2.0),
                                     Rotation(UnitVec3::of({0, 1, phi}), 2.0 * M_PI / 5.0)};
            const DualPair pairs[] = {DualPair::TT, DualPair::OC, DualPair::ID};
            for (int k = 0; k < 3 && ok; ++k) {
                const CylinderConfig c = delta_config(pairs[k], 0.37);
                if (line_set_distance(rotated(gens[k], c), c) > 1e-10) {
                    ok = false;
                    why = "sweep configuration not equivariant (" + dual_pair_name(pairs[k]) + ")";
                }
            }
        }

        report(13, "property battery", ok, ok ? "all invariants hold" : why);
    }

    std::printf("%d of 13 criteria passed\n", 13 - failures);
    return failures;
}
