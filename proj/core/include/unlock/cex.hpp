#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unlock {
namespace cex {

/// psi(x) = exp(-1/x) for x > 0, else 0.
double psi(double x);

/// Smooth bump: eta(s) = exp(1 - 1/(1 - 4 s^2)) for |s| < 1/2, else 0.
/// Even, decaying on [0, inf), eta(0) = 1, support [-1/2, 1/2].
double eta(double s);

/// Phi(x, y) = exp(-1/x^2) * eta((y - psi(x)) / psi(x)) for x > 0, else 0.
/// The support branch is decided by exact log-space inequalities, so the
/// result is 0 (and not garbage) even where psi underflows.
double phi(double x, double y);

/// Whether Phi(x, y) > 0 mathematically: x > 0 and y strictly inside the
/// eta-support band (psi/2, 3 psi/2), decided in log space. Phi itself may
/// underflow to 0 at such points (exp(-1/x^2) below double range).
bool phi_positive(double x, double y);

/// Same support test with y given as log(y); usable where y itself would
/// underflow (psi(x) is below double range already for x < ~0.0014).
bool phi_positive_logy(double x, double log_y);

/// Polynomial path gamma(t) = (x(t), y(t)) with x(0) = y(0) = 0.
struct AnalyticPath {
    std::vector<double> x_coeffs;  // x(t) = sum x_coeffs[k] t^(k+1)
    std::vector<double> y_coeffs;

    double x(double t) const;
    double y(double t) const;
    bool nonconstant() const;
};

struct PathProbe {
    AnalyticPath path;
    double verified_u{};  // largest grid u with Phi(gamma(t)) = 0 on (0, u]
    bool vanishes{};      // verified_u > 0
};

struct PathReport {
    std::vector<PathProbe> probes;
    bool pass{};  // every path vanishes on an initial segment
};

/// For each path, sweep a geometric grid of t down to 1e-6 and report the
/// largest u such that Phi(gamma(t)) = 0 for every sampled t in (0, u].
PathReport probe_analytic_paths(const std::vector<AnalyticPath>& paths,
                                double t_hi = 1.0, int samples_per_decade = 32);

/// Deterministic random polynomial paths of the given degree bound.
std::vector<AnalyticPath> random_paths(int count, int max_degree, std::uint64_t seed);

struct BeakSample {
    double x{};
    double log_y{};           // log psi(x) = -1/x; psi itself may underflow
    double dist_to_origin{};  // hypot(x, psi(x))
    bool phi_positive{};
    double log_phi{};         // log Phi = -1/x^2 along the spine
};

struct BeakReport {
    std::vector<BeakSample> spine;    // points (x, psi(x)), Phi > 0
    bool all_spine_positive{};
    bool outside_points_vanish{};     // (x, 2.5 psi(x)) gives Phi = 0
};

/// Walk the beak's spine y = psi(x) toward the origin: Phi > 0 at every
/// sample while (x, psi(x)) -> (0, 0), and points scaled outside the beak
/// give Phi = 0.
BeakReport probe_beak(const std::vector<double>& x_grid);

}  // namespace cex
}  // namespace unlock
