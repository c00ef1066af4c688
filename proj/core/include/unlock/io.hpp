#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "unlock/balls.hpp"
#include "unlock/cylinders.hpp"
#include "unlock/platonic_sweep.hpp"
#include "unlock/rigidity.hpp"
#include "unlock/unlockd3.hpp"

namespace unlock {
namespace io {

/// Fixed-width formatting used by all emitted CSV/JSON numbers.
std::string format_number(double v, int significant_digits = 12);

using ConfigFile = std::variant<CylinderConfig, BallCluster>;

/// Parse a configuration JSON document ("kind": "cylinders" | "balls").
/// Vectors are normalized on load (rejected if off by more than 1e-6);
/// cylinder directions are projected to the tangent plane and renormalized.
ConfigFile load_config(const std::string& json_text);
ConfigFile load_config_file(const std::string& path);

std::string to_json(const CylinderConfig& c);
std::string to_json(const BallCluster& c);
std::string to_json(const RigidityCertificate& cert);
std::string to_json(const std::vector<ZeroPattern>& zeros);

/// CSV with header `phi,kappa,delta,r`.
void write_gamma_csv(std::ostream& os, const std::vector<GammaPoint>& curve);
/// CSV with header `delta,r`.
void write_sweep_csv(std::ostream& os, const SweepCurve& curve);

/// Wavefront OBJ: each cylinder as a 32-gon prism of half-length 4 centered
/// at its tangent point, plus a subdivided icosphere for the unit ball.
/// Balls become icospheres of radius rho.
void write_obj(std::ostream& os, const CylinderConfig& c, double radius);
void write_obj(std::ostream& os, const BallCluster& c);

}  // namespace io
}  // namespace unlock
