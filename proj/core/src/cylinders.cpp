#include "unlock/cylinders.hpp"

#include <cmath>

namespace unlock {

Line axis_at_radius(const TangentLine& g, double r) {
    if (r < 0.0) throw std::invalid_argument("axis_at_radius: negative radius");
    return {g.point().vec() * (1.0 + r), g.direction()};
}

namespace {

double clearance(const TangentLine& g1, const TangentLine& g2, double r) {
    return line_distance(axis_at_radius(g1, r), axis_at_radius(g2, r)) - 2.0 * r;
}

constexpr double kScanStep = 0.05;
constexpr double kScanCap = 64.0;

}  // namespace

MaxRadius pairwise_max_radius(const TangentLine& g1, const TangentLine& g2) {
    if (same_line(g1.as_line(), g2.as_line()))
        throw std::invalid_argument("pairwise_max_radius: identical generatrices");

    if (clearance(g1, g2, 0.0) <= 0.0) return MaxRadius::bounded(0.0);

    double lo = 0.0;
    for (double hi = kScanStep; hi <= kScanCap + 1e-12; hi += kScanStep) {
        if (clearance(g1, g2, hi) <= 0.0) {
            // bisect to machine precision; downstream maximizers rely on a
            // low-noise radius function
            for (int it = 0; it < 100 && (hi - lo) > 1e-15 * (1.0 + hi); ++it) {
                const double mid = 0.5 * (lo + hi);
                (clearance(g1, g2, mid) > 0.0 ? lo : hi) = mid;
            }
            return MaxRadius::bounded(0.5 * (lo + hi));
        }
        lo = hi;
    }
    return MaxRadius::unbounded();
}

MaxRadius common_radius(const CylinderConfig& c) {
    if (c.size() < 2) throw std::invalid_argument("common_radius: need at least 2 generatrices");
    MaxRadius best = MaxRadius::unbounded();
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j) {
            MaxRadius r = pairwise_max_radius(c.generatrices[i], c.generatrices[j]);
            if (r < best) best = r;
        }
    return best;
}

CylinderConfig c6_config() {
    CylinderConfig c;
    for (int k = 0; k < 6; ++k) {
        const double lon = k * M_PI / 3.0;
        const UnitVec3 u(std::cos(lon), std::sin(lon), 0.0);
        const UnitVec3 north(0.0, 0.0, 1.0);
        c.generatrices.emplace_back(u, north);
    }
    return c;
}

CylinderConfig o6_config() {
    CylinderConfig c;
    for (const SolidEdge& e : platonic_edges(Solid::Tetrahedron).edges)
        c.generatrices.push_back(
            rotate_line_about_radial_axis(TangentLine(e.midpoint, e.direction), M_PI / 4.0));
    return c;
}

ContactGraph contact_graph(const CylinderConfig& c, double tol) {
    const MaxRadius r = common_radius(c);
    if (r.is_unbounded()) throw std::invalid_argument("contact_graph: unbounded common radius");
    ContactGraph g;
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j) {
            MaxRadius rij = pairwise_max_radius(c.generatrices[i], c.generatrices[j]);
            if (!rij.is_unbounded() && rij.value() <= r.value() + tol) g.pairs.emplace_back(i, j);
        }
    return g;
}

std::optional<Rational> is_pure_geodetic(double angle, long long qmax, double tol) {
    if (qmax < 1) throw std::invalid_argument("is_pure_geodetic: qmax must be >= 1");
    const double s = std::sin(angle) * std::sin(angle);

    // continued-fraction convergents of s, denominators up to qmax
    long long p_prev = 1, q_prev = 0;  // h_{-1}/k_{-1}
    long long p_cur = 0, q_cur = 1;    // h_0 = floor(s) = 0 for s in [0,1)
    double frac = s - std::floor(s);
    p_cur = static_cast<long long>(std::floor(s));

    Rational best{p_cur, 1};
    double best_err = std::abs(s - static_cast<double>(p_cur));

    for (int it = 0; it < 64 && frac > 1e-15; ++it) {
        frac = 1.0 / frac;
        const long long a = static_cast<long long>(std::floor(frac));
        frac -= std::floor(frac);
        const long long p_next = a * p_cur + p_prev;
        const long long q_next = a * q_cur + q_prev;
        if (q_next > qmax) break;
        p_prev = p_cur; q_prev = q_cur;
        p_cur = p_next; q_cur = q_next;
        const double err = std::abs(s - static_cast<double>(p_cur) / static_cast<double>(q_cur));
        if (err < best_err) { best_err = err; best = {p_cur, q_cur}; }
    }
    if (best_err < tol) return best;
    return std::nullopt;
}

}  // namespace unlock
