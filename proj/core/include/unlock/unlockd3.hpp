#pragma once

#include "unlock/cylinders.hpp"

namespace unlock {

/// Parameters of the D3-symmetric move family for C6: even-indexed cylinders
/// shift up by phi and by -kappa in longitude, odd-indexed ones down by phi
/// and by +kappa; all six directions then twist by delta about their radial
/// axes. (0,0,0) is C6 exactly.
struct D3Params {
    double phi{};
    double kappa{};
    double delta{};
};

/// A point of the curve gamma: the inner (kappa, delta) maximizer of the
/// common radius at fixed phi, and the attained radius.
struct GammaPoint {
    double phi{};
    double kappa_star{};
    double delta_star{};
    double r_star{};
};

struct CmResult {
    D3Params params;
    CylinderConfig config;
    double radius{};
    int sign_variant{};  // 0 = conventions as documented; 1..3 = retried variants
};

/// The six-cylinder configuration at the given family parameters.
/// Throws for |phi| >= pi/2.
CylinderConfig d3_family(const D3Params& p);

/// Inner maximization of the common radius over (kappa, delta) at fixed phi,
/// by multi-start Nelder-Mead (fixed seed). `starts` >= 1; an optional warm
/// start is tried in addition to the seeded ones.
GammaPoint gamma_point(double phi, int starts = 20, const GammaPoint* warm = nullptr);

/// Sampled gamma curve on a uniform phi grid over [0, phi_max].
std::vector<GammaPoint> gamma_curve(int grid, double phi_max = 0.8, int starts = 20);

/// Outer maximization of r_star(phi): grid scan plus high-accuracy 1-D
/// refinement. If the documented sign conventions fall short of the record
/// radius by more than 1e-6, the mirrored (kappa, delta) sign variants are
/// retried and the passing one recorded.
CmResult find_cm();

/// (3 + sqrt(33)) / 8, the record radius the gamma curve attains.
double record_radius();

}  // namespace unlock
