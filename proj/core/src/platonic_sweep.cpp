#include "unlock/platonic_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "unlock/optim.hpp"

namespace unlock {

DualPair dual_pair_from_name(const std::string& name) {
    if (name == "tt") return DualPair::TT;
    if (name == "oc") return DualPair::OC;
    if (name == "id") return DualPair::ID;
    throw std::invalid_argument("unknown dual pair: " + name);
}

std::string dual_pair_name(DualPair p) {
    switch (p) {
        case DualPair::TT: return "tt";
        case DualPair::OC: return "oc";
        case DualPair::ID: return "id";
    }
    throw std::invalid_argument("unknown dual pair id");
}

Solid base_solid(DualPair p) {
    switch (p) {
        case DualPair::TT: return Solid::Tetrahedron;
        case DualPair::OC: return Solid::Octahedron;
        case DualPair::ID: return Solid::Icosahedron;
    }
    throw std::invalid_argument("unknown dual pair id");
}

CylinderConfig delta_config(DualPair pair, double delta) {
    if (delta < 0.0 || delta >= M_PI)
        throw std::invalid_argument("delta_config: delta must lie in [0, pi)");
    CylinderConfig c;
    for (const SolidEdge& e : platonic_edges(base_solid(pair)).edges)
        c.generatrices.push_back(
            rotate_line_about_radial_axis(TangentLine(e.midpoint, e.direction), delta));
    return c;
}

namespace {

double radius_at(DualPair pair, double delta) {
    const MaxRadius r = common_radius(delta_config(pair, delta));
    return r.is_unbounded() ? 1e9 : r.value();
}

// min pairwise distance between the generatrices; r(delta) = 0 iff this is 0
double min_generatrix_distance(DualPair pair, double delta) {
    const CylinderConfig c = delta_config(pair, delta);
    double best = 1e18;
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j)
            best = std::min(best, line_distance(c.generatrices[i], c.generatrices[j]));
    return best;
}

}  // namespace

SweepCurve radius_curve(DualPair pair, int grid) {
    if (grid < 2) throw std::invalid_argument("radius_curve: grid must be >= 2");
    SweepCurve curve;
    for (int i = 0; i < grid; ++i) {
        const double d = (M_PI / 2.0) * i / (grid - 1);
        curve.delta.push_back(d);
        curve.r.push_back(radius_at(pair, d));
    }
    return curve;
}

SweepMax maximize(DualPair pair) {
    const Max1D m = refine_max_1d([&](double d) { return radius_at(pair, d); },
                                  0.0, M_PI / 2.0, 256);
    return {m.x, m.value};
}

double find_t0() {
    auto poly = [](double t) {
        return ((((5.0 * t - 80.0) * t + 0.0) * t + 190.0) * t * t - 4.0 * t - 84.0) * t + 9.0;
    };
    double lo = 0.6, hi = 0.8;
    if (poly(lo) * poly(hi) >= 0.0)
        throw std::runtime_error("find_t0: no sign change on [0.6, 0.8]");
    const bool increasing = poly(lo) < 0.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        ((poly(mid) < 0.0) == increasing ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<ZeroPattern> id_zeros(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("id_zeros: tol must be > 0");
    const DualPair pair = DualPair::ID;
    const int scan = 2048;
    auto g = [&](double d) { return min_generatrix_distance(pair, d); };

    // locate candidate dips of the min generatrix distance, then squeeze each
    // with golden section (the distance is V-shaped at a genuine zero)
    std::vector<double> grid_d(scan + 1), grid_g(scan + 1);
    for (int i = 0; i <= scan; ++i) {
        grid_d[i] = (M_PI / 2.0) * i / scan;
        grid_g[i] = g(grid_d[i]);
    }

    std::vector<ZeroPattern> zeros;
    for (int i = 1; i < scan; ++i) {
        if (grid_g[i] > grid_g[i - 1] || grid_g[i] > grid_g[i + 1]) continue;
        if (grid_g[i] > 0.05) continue;  // shallow dip, not near a zero
        const Max1D m = golden_section_max(
            [&](double d) { return -g(d); }, grid_d[i - 1], grid_d[i + 1], 1e-13);
        const double delta = m.x, dist = -m.value;
        if (dist > 1e-7) continue;                    // positive local minimum
        if (delta < 1e-9 || delta > M_PI / 2.0 - 1e-9) continue;  // endpoint
        if (radius_at(pair, delta) > tol) continue;

        // cluster the 30 lines into connected components of the
        // intersection graph
        const CylinderConfig c = delta_config(pair, delta);
        const int n = c.size();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (line_distance(c.generatrices[a], c.generatrices[b]) < 1e-7)
                    parent[find(a)] = find(b);
        std::map<int, int> size;
        for (int a = 0; a < n; ++a) ++size[find(a)];
        std::map<int, int> count_by_size;
        for (const auto& [root, sz] : size) ++count_by_size[sz];
        ZeroPattern z;
        z.delta = delta;
        for (auto it = count_by_size.rbegin(); it != count_by_size.rend(); ++it)
            z.components.emplace_back(it->second, it->first);
        if (!zeros.empty() && std::abs(zeros.back().delta - delta) < 1e-9) continue;
        zeros.push_back(std::move(z));
    }
    return zeros;
}

}  // namespace unlock
