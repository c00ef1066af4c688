// Command-line workbench for tangent-cylinder and kissing-ball configurations.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unlock/balls.hpp"
#include "unlock/cex.hpp"
#include "unlock/io.hpp"
#include "unlock/platonic_sweep.hpp"
#include "unlock/rigidity.hpp"
#include "unlock/unlockd3.hpp"

using namespace unlock;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

std::uint64_t g_seed = 0;

std::string num(double v) { return io::format_number(v); }

void header(const std::string& command) {
    std::cout << "command: " << command << "\n";
    std::cout << "seed: " << g_seed << "\n";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

CylinderConfig builtin_cylinders(const std::string& id) {
    if (id == "c6") return c6_config();
    if (id == "o6") return o6_config();
    if (id == "cm") return find_cm().config;
    throw std::runtime_error("unknown builtin cylinder configuration: " + id);
}

CylinderConfig cylinders_from(const std::string& builtin, const std::string& input) {
    if (!builtin.empty()) return builtin_cylinders(builtin);
    const io::ConfigFile f = io::load_config_file(input);
    if (!std::holds_alternative<CylinderConfig>(f))
        throw std::runtime_error(input + " does not hold a cylinder configuration");
    return std::get<CylinderConfig>(f);
}

// deduplicated angle list for the rational-sine-square report
std::vector<double> dedup(std::vector<double> angles) {
    std::sort(angles.begin(), angles.end());
    std::vector<double> out;
    for (double a : angles)
        if (out.empty() || a - out.back() > 1e-9) out.push_back(a);
    return out;
}

void report_pure_geodetic(const CylinderConfig& c) {
    std::vector<double> colat, pairwise, direction;
    for (const TangentLine& g : c.generatrices) {
        colat.push_back(std::acos(std::clamp(g.point().z(), -1.0, 1.0)));
        direction.push_back(std::acos(std::clamp(std::abs(g.direction().z()), 0.0, 1.0)));
    }
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j)
            pairwise.push_back(std::acos(std::clamp(
                dot(c.generatrices[i].point(), c.generatrices[j].point()), -1.0, 1.0)));

    const struct {
        const char* label;
        std::vector<double> angles;
    } groups[] = {{"tangent-point colatitude", dedup(colat)},
                  {"pairwise tangent-point angle", dedup(pairwise)},
                  {"direction angle to vertical", dedup(direction)}};
    std::cout << "pure-geodetic scan (sin^2 as p/q, q <= 100, tol 1e-9):\n";
    for (const auto& g : groups)
        for (double a : g.angles) {
            std::cout << "  " << g.label << " " << num(a) << ": ";
            if (const auto r = is_pure_geodetic(a, 100, 1e-9))
                std::cout << "sin^2 = " << r->p << "/" << r->q << "\n";
            else
                std::cout << "no rational sin^2 found\n";
        }
}

int cmd_constants() {
    header("constants");
    int bad = 0;
    auto row = [&](const std::string& label, double computed, double target, double tol) {
        const double diff = std::abs(computed - target);
        const bool ok = diff < tol;
        if (!ok) ++bad;
        std::cout << label << ": computed " << num(computed) << ", target " << num(target)
                  << ", |diff| " << num(diff) << (ok ? " (ok)" : " (OUT OF TOLERANCE)") << "\n";
    };

    std::vector<UnitVec3> icosa;
    for (const UnitVec3& v : platonic_vertices(Solid::Icosahedron)) icosa.push_back(v);
    row("icosahedral blow-up radius", max_common_radius(icosa).value(), 1.10851, 1e-5);

    const CmResult cm = find_cm();
    row("record cylinder radius", cm.radius, (3.0 + std::sqrt(33.0)) / 8.0, 1e-9);
    std::cout << "previous record for comparison: 1.049659"
              << (cm.radius > 1.049659 ? " (exceeded)" : " (NOT EXCEEDED)") << "\n";
    if (cm.radius <= 1.049659) ++bad;

    const SweepMax tt = maximize(DualPair::TT);
    row("tetrahedral sweep delta*", tt.delta_star, M_PI / 4.0, 1e-8);
    row("tetrahedral sweep r*", tt.r_star, 1.0, 1e-8);

    const SweepMax oc = maximize(DualPair::OC);
    row("octahedral sweep delta*", oc.delta_star,
        std::atan(std::pow(3.0, 0.25) / std::sqrt(2.0)), 1e-8);
    row("octahedral sweep r*", oc.r_star,
        (std::sqrt(3.0) - 1.0) / (1.0 + 2.0 * std::sqrt(2.0) - std::sqrt(3.0)), 1e-8);

    const SweepMax id = maximize(DualPair::ID);
    row("icosahedral sweep delta*", id.delta_star, 0.694707, 1e-5);
    row("icosahedral sweep r*", id.r_star, 0.115558, 1e-5);
    row("sextic root t0", find_t0(), 0.694356, 1e-6);

    return bad == 0 ? kExitPass : kExitFail;
}

int cmd_balls_verify(const std::string& cluster, double tmax, int steps) {
    header("balls verify --cluster " + cluster);
    BallMove move;
    if (cluster == "fcc")
        move = fcc_ball_move();
    else if (cluster == "hcp")
        move = hcp_ball_move();
    else if (cluster == "broken")
        move = broken_fcc_move();
    else
        throw std::runtime_error("unknown cluster: " + cluster);

    const UnlockReport rep = verify_unlock(move, tmax, steps);
    std::cout << "move: " << rep.move_id << ", t_max " << num(rep.t_max) << ", steps "
              << rep.steps << "\n";
    std::cout << "preserved contacts: " << rep.preserved_pairs.size() << "\n";
    std::cout << "min gap over free pairs at t_max: " << num(rep.min_gap_free.back()) << "\n";
    std::cout << "min gap over all pairs at t_max: " << num(rep.min_gap_all.back()) << "\n";
    if (rep.pass) {
        std::cout << "verdict: PASS\n";
        return kExitPass;
    }
    std::cout << "verdict: FAIL (first failing t = " << num(rep.first_fail_t) << ")\n";
    return kExitFail;
}

int cmd_balls_blowup(const std::string& solid) {
    header("balls blowup --solid " + solid);
    std::vector<UnitVec3> dirs;
    for (const UnitVec3& v : platonic_vertices(solid_from_name(solid))) dirs.push_back(v);
    const MaxRadius r = max_common_radius(dirs);
    if (r.is_unbounded()) {
        std::cout << "max common radius: unbounded\n";
        return kExitPass;
    }
    std::cout << "max common radius: " << num(r.value()) << "\n";
    std::cout << "kissing pairs at max: " << kissing_count_at_max(dirs) << "\n";
    return kExitPass;
}

int cmd_cyl_radius(const std::string& builtin, const std::string& input) {
    header("cyl radius");
    const CylinderConfig c = cylinders_from(builtin, input);
    const MaxRadius r = common_radius(c);
    std::cout << "lines: " << c.size() << "\n";
    if (r.is_unbounded()) {
        std::cout << "common radius: unbounded\n";
        return kExitPass;
    }
    std::cout << "common radius: " << num(r.value()) << "\n";
    std::cout << "contacts at common radius: " << contact_graph(c, 1e-6).pairs.size() << "\n";
    report_pure_geodetic(c);
    return kExitPass;
}

int cmd_cyl_gamma(int phi_steps, const std::string& out) {
    header("cyl gamma --phi-steps " + std::to_string(phi_steps));
    const std::vector<GammaPoint> curve = gamma_curve(phi_steps);
    std::ostringstream csv;
    io::write_gamma_csv(csv, curve);
    write_text(out, csv.str());
    double best_r = 0.0, best_phi = 0.0;
    for (const GammaPoint& g : curve)
        if (g.r_star > best_r) best_r = g.r_star, best_phi = g.phi;
    std::cout << "wrote " << curve.size() << " rows to " << out << "\n";
    std::cout << "curve maximum: r = " << num(best_r) << " at phi = " << num(best_phi) << "\n";
    return kExitPass;
}

int cmd_sweep(const std::string& pair, int samples, const std::string& out) {
    header("sweep --pair " + pair + " --samples " + std::to_string(samples));
    const SweepCurve curve = radius_curve(dual_pair_from_name(pair), samples);
    std::ostringstream csv;
    io::write_sweep_csv(csv, curve);
    write_text(out, csv.str());
    double best = 0.0;
    for (double r : curve.r) best = std::max(best, r);
    std::cout << "wrote " << curve.delta.size() << " rows to " << out << "\n";
    std::cout << "max sampled r: " << num(best) << "\n";
    return kExitPass;
}

int cmd_sweep_maximize(const std::string& pair) {
    header("sweep maximize --pair " + pair);
    const SweepMax m = maximize(dual_pair_from_name(pair));
    std::cout << "delta*: " << num(m.delta_star) << "\n";
    std::cout << "r*: " << num(m.r_star) << "\n";
    return kExitPass;
}

int cmd_sweep_zeros(const std::string& out) {
    header("sweep zeros");
    const std::vector<ZeroPattern> zeros = id_zeros(1e-9);
    const std::string json = io::to_json(zeros);
    if (out.empty())
        std::cout << json << "\n";
    else {
        write_text(out, json + "\n");
        std::cout << "wrote " << zeros.size() << " zeros to " << out << "\n";
    }
    for (const ZeroPattern& z : zeros) {
        std::cout << "delta = " << num(z.delta) << ":";
        for (auto [count, size] : z.components)
            std::cout << " " << count << " components of size " << size;
        std::cout << "\n";
    }
    return kExitPass;
}

int cmd_rigidity(const std::string& builtin, const std::string& input,
                 const std::string& out) {
    header("rigidity");
    if (!builtin.empty() && builtin != "cm" && builtin != "o6")
        throw std::runtime_error("unknown builtin rigidity target: " + builtin);
    const CylinderConfig c = cylinders_from(builtin, input);
    const RigidityCertificate cert = rigidity_report(c, 1e-6, g_seed);
    const std::string json = io::to_json(cert);
    if (out.empty())
        std::cout << json << "\n";
    else {
        write_text(out, json + "\n");
        std::cout << "wrote certificate to " << out << "\n";
    }
    std::cout << "common radius: " << num(cert.common_radius) << "\n";
    std::cout << "verdict: " << verdict_name(cert.verdict)
              << (cert.families_agree ? " (families agree)" : " (families disagree)") << "\n";
    return cert.verdict == Verdict::Inconclusive ? kExitFail : kExitPass;
}

int cmd_cex_probe(int paths, int degree) {
    header("cex probe --paths " + std::to_string(paths) + " --degree " +
           std::to_string(degree));
    const cex::PathReport rep =
        cex::probe_analytic_paths(cex::random_paths(paths, degree, g_seed));
    int vanish = 0;
    for (const cex::PathProbe& p : rep.probes) vanish += p.vanishes ? 1 : 0;
    std::cout << "paths vanishing on an initial segment: " << vanish << " / "
              << rep.probes.size() << "\n";

    std::vector<double> grid;
    for (double x = 0.2; x > 1e-5; x *= 0.7) grid.push_back(x);
    const cex::BeakReport beak = cex::probe_beak(grid);
    std::cout << "beak spine positive at all " << beak.spine.size()
              << " samples: " << (beak.all_spine_positive ? "yes" : "no") << "\n";
    std::cout << "closest positive point to the origin: "
              << num(beak.spine.back().dist_to_origin) << "\n";
    std::cout << "scaled-out points vanish: " << (beak.outside_points_vanish ? "yes" : "no")
              << "\n";
    const bool ok = rep.pass && beak.all_spine_positive && beak.outside_points_vanish;
    std::cout << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitPass : kExitFail;
}

int cmd_export(const std::string& builtin, const std::string& input,
               const std::string& format, const std::string& out) {
    header("export --format " + format);
    io::ConfigFile cfg;
    if (builtin == "fcc")
        cfg = fcc_config();
    else if (builtin == "hcp")
        cfg = hcp_config();
    else if (!builtin.empty())
        cfg = builtin_cylinders(builtin);
    else
        cfg = io::load_config_file(input);

    std::ostringstream os;
    if (format == "json") {
        std::visit([&](const auto& c) { os << io::to_json(c) << "\n"; }, cfg);
    } else if (format == "obj") {
        if (std::holds_alternative<CylinderConfig>(cfg)) {
            const CylinderConfig& c = std::get<CylinderConfig>(cfg);
            const MaxRadius r = common_radius(c);
            io::write_obj(os, c, r.is_unbounded() ? 1.0 : r.value());
        } else {
            io::write_obj(os, std::get<BallCluster>(cfg));
        }
    } else {
        throw std::runtime_error("unknown format: " + format);
    }
    write_text(out, os.str());
    std::cout << "wrote " << out << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for cylinder and ball kissing configurations"};
    app.require_subcommand(1);
    app.add_option("--seed", g_seed, "Seed for all stochastic searches")->capture_default_str();

    // constants
    CLI::App* constants = app.add_subcommand("constants", "Reproduce the headline constants");

    // balls
    CLI::App* balls = app.add_subcommand("balls", "Ball cluster operations");
    balls->require_subcommand(1);
    std::string cluster = "fcc";
    double tmax = 0.3;
    int steps = 256;
    CLI::App* balls_verify = balls->add_subcommand("verify", "Verify an unlocking move");
    balls_verify->add_option("--cluster", cluster, "fcc | hcp | broken")->capture_default_str();
    balls_verify->add_option("--tmax", tmax, "Sweep endpoint")->capture_default_str();
    balls_verify->add_option("--steps", steps, "Sample count")->capture_default_str();
    std::string solid = "icosahedron";
    CLI::App* balls_blowup = balls->add_subcommand("blowup", "Max common radius at fixed tangent points");
    balls_blowup->add_option("--solid", solid, "Platonic solid name")->capture_default_str();

    // cyl
    CLI::App* cyl = app.add_subcommand("cyl", "Cylinder configuration operations");
    cyl->require_subcommand(1);
    std::string cyl_builtin, cyl_input;
    CLI::App* cyl_radius = cyl->add_subcommand("radius", "Common radius and contacts");
    CLI::Option* crb = cyl_radius->add_option("--builtin", cyl_builtin, "c6 | o6 | cm");
    cyl_radius->add_option("--input", cyl_input, "Configuration JSON file")->excludes(crb);
    int phi_steps = 33;
    std::string gamma_out = "gamma.csv";
    CLI::App* cyl_gamma = cyl->add_subcommand("gamma", "Inner-maximizer curve CSV");
    cyl_gamma->add_option("--phi-steps", phi_steps, "Grid size")->capture_default_str();
    cyl_gamma->add_option("--out", gamma_out, "Output CSV path")->capture_default_str();

    // sweep
    CLI::App* sweep = app.add_subcommand("sweep", "Edge-rotation radius sweeps");
    std::string pair = "tt";
    int samples = 256;
    std::string sweep_out = "sweep.csv";
    sweep->add_option("--pair", pair, "tt | oc | id");
    sweep->add_option("--samples", samples, "Sample count")->capture_default_str();
    sweep->add_option("--out", sweep_out, "Output CSV path")->capture_default_str();
    std::string max_pair = "tt";
    CLI::App* sweep_max = sweep->add_subcommand("maximize", "Refined sweep maximum");
    sweep_max->add_option("--pair", max_pair, "tt | oc | id");
    std::string zeros_out;
    CLI::App* sweep_zeros = sweep->add_subcommand("zeros", "Interior zeros of the icosahedral sweep");
    sweep_zeros->add_option("--out", zeros_out, "Output JSON path (default stdout)");

    // rigidity
    CLI::App* rigidity = app.add_subcommand("rigidity", "Second-order certificate");
    std::string rig_builtin, rig_input, rig_out;
    CLI::Option* rb = rigidity->add_option("--builtin", rig_builtin, "cm | o6");
    rigidity->add_option("--input", rig_input, "Configuration JSON file")->excludes(rb);
    rigidity->add_option("--out", rig_out, "Output JSON path (default stdout)");

    // cex
    CLI::App* cex_cmd = app.add_subcommand("cex", "Flat-function counterexample probes");
    cex_cmd->require_subcommand(1);
    int cex_paths = 100, cex_degree = 4;
    CLI::App* cex_probe = cex_cmd->add_subcommand("probe", "Probe analytic paths and the beak");
    cex_probe->add_option("--paths", cex_paths, "Number of random paths")->capture_default_str();
    cex_probe->add_option("--degree", cex_degree, "Max polynomial degree")->capture_default_str();

    // export
    CLI::App* exp = app.add_subcommand("export", "Write a configuration as OBJ or JSON");
    std::string exp_builtin, exp_input, exp_format = "obj", exp_out = "out.obj";
    CLI::Option* eb = exp->add_option("--builtin", exp_builtin, "c6 | o6 | cm | fcc | hcp");
    exp->add_option("--input", exp_input, "Configuration JSON file")->excludes(eb);
    exp->add_option("--format", exp_format, "obj | json")->capture_default_str();
    exp->add_option("--out", exp_out, "Output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    int code = kExitUsage;
    try {
        if (constants->parsed()) {
            code = cmd_constants();
        } else if (balls->parsed()) {
            code = balls_verify->parsed() ? cmd_balls_verify(cluster, tmax, steps)
                                          : cmd_balls_blowup(solid);
        } else if (cyl->parsed()) {
            code = cyl_radius->parsed() ? cmd_cyl_radius(cyl_builtin, cyl_input)
                                        : cmd_cyl_gamma(phi_steps, gamma_out);
        } else if (sweep->parsed()) {
            if (sweep_max->parsed())
                code = cmd_sweep_maximize(max_pair);
            else if (sweep_zeros->parsed())
                code = cmd_sweep_zeros(zeros_out);
            else
                code = cmd_sweep(pair, samples, sweep_out);
        } else if (rigidity->parsed()) {
            code = cmd_rigidity(rig_builtin, rig_input, rig_out);
        } else if (cex_cmd->parsed()) {
            code = cmd_cex_probe(cex_paths, cex_degree);
        } else if (exp->parsed()) {
            code = cmd_export(exp_builtin, exp_input, exp_format, exp_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::cerr << "elapsed_s: " << io::format_number(dt.count(), 4) << "\n";
    return code;
}
