#include "unlock/geom3.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace unlock {

double line_distance(const Line& a, const Line& b) {
    const Vec3 n = cross(a.direction.vec(), b.direction.vec());
    const Vec3 w = b.point - a.point;
    const double nn = norm(n);
    if (nn < 1e-14) {
        // parallel: distance from b.point to line a
        const Vec3 proj = w - dot(w, a.direction.vec()) * a.direction.vec();
        return norm(proj);
    }
    return std::abs(dot(n, w)) / nn;
}

double line_distance(const TangentLine& a, const TangentLine& b) {
    return line_distance(a.as_line(), b.as_line());
}

bool same_line(const Line& a, const Line& b) {
    return line_distance(a, b) < 1e-9 &&
           std::abs(dot(a.direction, b.direction)) > 1.0 - 1e-9;
}

TangentLine rotate_line_about_radial_axis(const TangentLine& g, double delta) {
    const Rotation r(g.point(), delta);
    Vec3 t = r * g.direction().vec();
    // re-project to the tangent plane so the invariant survives roundoff
    t -= dot(t, g.point().vec()) * g.point().vec();
    return TangentLine(g.point(), UnitVec3::of(t));
}

Solid solid_from_name(const std::string& name) {
    if (name == "tetrahedron") return Solid::Tetrahedron;
    if (name == "cube") return Solid::Cube;
    if (name == "octahedron") return Solid::Octahedron;
    if (name == "icosahedron") return Solid::Icosahedron;
    if (name == "dodecahedron") return Solid::Dodecahedron;
    throw std::invalid_argument("unknown solid: " + name);
}

std::string solid_name(Solid s) {
    switch (s) {
        case Solid::Tetrahedron: return "tetrahedron";
        case Solid::Cube: return "cube";
        case Solid::Octahedron: return "octahedron";
        case Solid::Icosahedron: return "icosahedron";
        case Solid::Dodecahedron: return "dodecahedron";
    }
    throw std::invalid_argument("unknown solid id");
}

namespace {

std::vector<Vec3> raw_vertices(Solid s) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> v;
    switch (s) {
        case Solid::Tetrahedron:
            v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
            break;
        case Solid::Cube:
            for (double x : {-1.0, 1.0})
                for (double y : {-1.0, 1.0})
                    for (double z : {-1.0, 1.0}) v.push_back({x, y, z});
            break;
        case Solid::Octahedron:
            v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
            break;
        case Solid::Icosahedron:
            for (double a : {-1.0, 1.0})
                for (double b : {-phi, phi}) {
                    v.push_back({0, a, b});
                    v.push_back({a, b, 0});
                    v.push_back({b, 0, a});
                }
            break;
        case Solid::Dodecahedron: {
            // face centers of the icosahedron: mean of each vertex triangle
            const auto ico = raw_vertices(Solid::Icosahedron);
            const int n = static_cast<int>(ico.size());
            // faces = triples of mutually adjacent vertices (pairwise at edge length)
            double emin = 1e18;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) emin = std::min(emin, norm(ico[i] - ico[j]));
            auto adj = [&](int i, int j) { return norm(ico[i] - ico[j]) < emin * 1.0001; };
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k)
                        if (adj(i, j) && adj(j, k) && adj(i, k))
                            v.push_back((ico[i] + ico[j] + ico[k]) / 3.0);
            break;
        }
    }
    return v;
}

}  // namespace

std::vector<UnitVec3> platonic_vertices(Solid s) {
    std::vector<UnitVec3> out;
    for (const Vec3& v : raw_vertices(s)) out.push_back(UnitVec3::of(v));
    return out;
}

SolidEdgeData platonic_edges(Solid s) {
    const auto raw = raw_vertices(s);
    const int n = static_cast<int>(raw.size());
    double emin = 1e18;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) emin = std::min(emin, norm(raw[i] - raw[j]));

    SolidEdgeData data{s, {}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (norm(raw[i] - raw[j]) < emin * 1.0001)
                data.edges.push_back({UnitVec3::of(raw[i] + raw[j]),
                                      UnitVec3::of(raw[j] - raw[i])});
    return data;
}

}  // namespace unlock
