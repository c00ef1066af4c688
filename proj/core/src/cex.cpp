#include "unlock/cex.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace unlock {
namespace cex {

double psi(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double eta(double s) {
    const double q = 4.0 * s * s;
    if (q >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - q));
}

namespace {

// log(y / psi(x)) = log(y) + 1/x, finite for x > 0, y > 0
double log_ratio(double x, double y) { return std::log(y) + 1.0 / x; }

const double kLogHalf = std::log(0.5);
const double kLogThreeHalves = std::log(1.5);

}  // namespace

bool phi_positive(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) return false;
    const double t = log_ratio(x, y);
    return t > kLogHalf && t < kLogThreeHalves;
}

bool phi_positive_logy(double x, double log_y) {
    if (!(x > 0.0) || !std::isfinite(log_y)) return false;
    const double t = log_y + 1.0 / x;
    return t > kLogHalf && t < kLogThreeHalves;
}

double phi(double x, double y) {
    if (!phi_positive(x, y)) return 0.0;
    const double s = std::expm1(log_ratio(x, y));  // y/psi - 1, inside (-1/2, 1/2)
    return std::exp(-1.0 / (x * x)) * eta(s);
}

double AnalyticPath::x(double t) const {
    double acc = 0.0;
    for (auto it = x_coeffs.rbegin(); it != x_coeffs.rend(); ++it) acc = (acc + *it) * t;
    return acc;
}

double AnalyticPath::y(double t) const {
    double acc = 0.0;
    for (auto it = y_coeffs.rbegin(); it != y_coeffs.rend(); ++it) acc = (acc + *it) * t;
    return acc;
}

bool AnalyticPath::nonconstant() const {
    for (double c : x_coeffs)
        if (c != 0.0) return true;
    for (double c : y_coeffs)
        if (c != 0.0) return true;
    return false;
}

PathReport probe_analytic_paths(const std::vector<AnalyticPath>& paths, double t_hi,
                                int samples_per_decade) {
    PathReport rep;
    rep.pass = true;
    const double t_lo = 1e-6;
    const int decades_steps =
        static_cast<int>(std::ceil(std::log10(t_hi / t_lo) * samples_per_decade));

    for (const AnalyticPath& p : paths) {
        if (!p.nonconstant())
            throw std::invalid_argument("probe_analytic_paths: constant path");
        PathProbe probe;
        probe.path = p;
        // ascend the geometric grid from t_lo; the verified u is the largest
        // clean prefix (first positive sample ends it)
        double u = 0.0;
        for (int i = decades_steps; i >= 0; --i) {
            const double t = t_hi * std::pow(t_lo / t_hi, double(i) / decades_steps);
            if (phi_positive(p.x(t), p.y(t))) break;
            u = t;
        }
        probe.verified_u = u;
        probe.vanishes = u > 0.0;
        if (!probe.vanishes) rep.pass = false;
        rep.probes.push_back(std::move(probe));
    }
    return rep;
}

std::vector<AnalyticPath> random_paths(int count, int max_degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::vector<AnalyticPath> out;
    while (static_cast<int>(out.size()) < count) {
        AnalyticPath p;
        p.x_coeffs.resize(max_degree);
        p.y_coeffs.resize(max_degree);
        for (double& c : p.x_coeffs) c = coeff(rng);
        for (double& c : p.y_coeffs) c = coeff(rng);
        if (p.nonconstant()) out.push_back(std::move(p));
    }
    return out;
}

BeakReport probe_beak(const std::vector<double>& x_grid) {
    if (x_grid.empty()) throw std::invalid_argument("probe_beak: empty grid");
    for (size_t i = 0; i + 1 < x_grid.size(); ++i)
        if (!(x_grid[i] > x_grid[i + 1]) || !(x_grid[i + 1] > 0.0))
            throw std::invalid_argument("probe_beak: grid must be positive and decreasing");

    BeakReport rep;
    rep.all_spine_positive = true;
    rep.outside_points_vanish = true;
    for (double x : x_grid) {
        BeakSample s;
        s.x = x;
        s.log_y = -1.0 / x;  // spine: y = psi(x) exactly, carried in log form
        s.dist_to_origin = std::hypot(x, psi(x));
        s.phi_positive = phi_positive_logy(x, s.log_y);
        s.log_phi = -1.0 / (x * x);  // eta(0) = 1 on the spine
        if (!s.phi_positive) rep.all_spine_positive = false;
        // 2.5 psi(x) lies above the support band [psi/2, 3 psi/2]
        if (phi_positive_logy(x, std::log(2.5) + s.log_y) || phi(x, 2.5 * psi(x)) != 0.0)
            rep.outside_points_vanish = false;
        rep.spine.push_back(s);
    }
    return rep;
}

}  // namespace cex
}  // namespace unlock
