#include "unlock/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace unlock {
namespace io {

using nlohmann::json;

std::string format_number(double v, int significant_digits) {
    std::ostringstream os;
    os.precision(significant_digits);
    os << v;
    return os.str();
}

namespace {

Vec3 parse_vec(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

UnitVec3 parse_unit(const json& j) {
    const Vec3 v = parse_vec(j);
    const double n = norm(v);
    if (std::abs(n - 1.0) > 1e-6)
        throw std::invalid_argument("vector does not normalize within 1e-6");
    return UnitVec3::of(v);
}

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

}  // namespace

ConfigFile load_config(const std::string& json_text) {
    const json j = json::parse(json_text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "balls") {
        BallCluster c;
        c.rho = j.value("radius", 1.0);
        if (!(c.rho > 0.0)) throw std::invalid_argument("balls: radius must be positive");
        for (const json& d : j.at("directions")) c.directions.push_back(parse_unit(d));
        return c;
    }
    if (kind == "cylinders") {
        const json& tps = j.at("tangent_points");
        const json& dirs = j.at("directions");
        if (tps.size() != dirs.size())
            throw std::invalid_argument("cylinders: tangent_points/directions length mismatch");
        CylinderConfig c;
        for (size_t i = 0; i < tps.size(); ++i) {
            const UnitVec3 u = parse_unit(tps[i]);
            Vec3 t = parse_vec(dirs[i]);
            t -= dot(t, u.vec()) * u.vec();  // enforce tangency
            if (norm(t) < 1e-6)
                throw std::invalid_argument("cylinders: direction is radial, no tangent part");
            c.generatrices.emplace_back(u, UnitVec3::of(t));
        }
        return c;
    }
    throw std::invalid_argument("unknown config kind: " + kind);
}

ConfigFile load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config(buf.str());
}

std::string to_json(const CylinderConfig& c) {
    json j;
    j["kind"] = "cylinders";
    j["tangent_points"] = json::array();
    j["directions"] = json::array();
    for (const TangentLine& g : c.generatrices) {
        j["tangent_points"].push_back(vec_json(g.point().vec()));
        j["directions"].push_back(vec_json(g.direction().vec()));
    }
    return j.dump(2);
}

std::string to_json(const BallCluster& c) {
    json j;
    j["kind"] = "balls";
    j["radius"] = c.rho;
    j["directions"] = json::array();
    for (const UnitVec3& d : c.directions) j["directions"].push_back(vec_json(d.vec()));
    return j.dump(2);
}

namespace {

json family_json(const FamilyCertificate& cert) {
    json j;
    j["family"] = family_name(cert.family);
    j["active_pairs"] = json::array();
    for (const auto& [a, b] : cert.active) j["active_pairs"].push_back(json::array({a, b}));
    j["dependencies"] = json::array();
    for (const ConvexDependence& d : cert.dependencies)
        j["dependencies"].push_back({{"weights", d.weights}, {"residual", d.residual}});
    j["dim_E_raw"] = cert.dim_e_raw;
    j["dim_E"] = cert.dim_e;
    j["form_max_eigenvalues"] = cert.form_max_eigenvalues;
    j["form_min_eigenvalues"] = cert.form_min_eigenvalues;
    if (cert.dependencies.size() > 1) {
        j["infeasibility"] = {{"infeasible", cert.infeasibility.infeasible},
                              {"max_min", cert.infeasibility.max_min},
                              {"witness", cert.infeasibility.witness},
                              {"starts", cert.infeasibility.starts}};
    }
    j["verdict"] = verdict_name(cert.verdict);
    if (!cert.note.empty()) j["note"] = cert.note;
    return j;
}

}  // namespace

std::string to_json(const RigidityCertificate& cert) {
    json j;
    j["common_radius"] = cert.common_radius;
    j["primary"] = family_json(cert.primary);
    j["secondary"] = family_json(cert.secondary);
    j["families_agree"] = cert.families_agree;
    j["verdict"] = verdict_name(cert.verdict);
    return j.dump(2);
}

std::string to_json(const std::vector<ZeroPattern>& zeros) {
    json j;
    j["zeros"] = json::array();
    for (const ZeroPattern& z : zeros) {
        json comps = json::array();
        for (const auto& [count, size] : z.components)
            comps.push_back(json::array({count, size}));
        j["zeros"].push_back({{"delta", z.delta}, {"components", comps}});
    }
    return j.dump(2);
}

void write_gamma_csv(std::ostream& os, const std::vector<GammaPoint>& curve) {
    os << "phi,kappa,delta,r\n";
    for (const GammaPoint& g : curve)
        os << format_number(g.phi) << ',' << format_number(g.kappa_star) << ','
           << format_number(g.delta_star) << ',' << format_number(g.r_star) << '\n';
}

void write_sweep_csv(std::ostream& os, const SweepCurve& curve) {
    os << "delta,r\n";
    for (size_t i = 0; i < curve.delta.size(); ++i)
        os << format_number(curve.delta[i]) << ',' << format_number(curve.r[i]) << '\n';
}

namespace {

struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;  // 0-based
};

Mesh icosphere(const Vec3& center, double radius, int subdivisions) {
    Mesh m;
    for (const UnitVec3& v : platonic_vertices(Solid::Icosahedron)) m.vertices.push_back(v.vec());
    const double emin = 2.0 / std::sqrt(2.0 + (1.0 + std::sqrt(5.0)) / 2.0 *
                                                  ((1.0 + std::sqrt(5.0)) / 2.0 + 1.0));
    // faces: mutually adjacent triples
    const int n0 = static_cast<int>(m.vertices.size());
    auto adj = [&](int i, int j) { return norm(m.vertices[i] - m.vertices[j]) < emin * 1.1; };
    for (int i = 0; i < n0; ++i)
        for (int j = i + 1; j < n0; ++j)
            for (int k = j + 1; k < n0; ++k)
                if (adj(i, j) && adj(j, k) && adj(i, k)) m.faces.push_back({i, j, k});

    for (int s = 0; s < subdivisions; ++s) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            const Vec3 v = m.vertices[a] + m.vertices[b];
            m.vertices.push_back(v / norm(v));
            const int idx = static_cast<int>(m.vertices.size()) - 1;
            midpoint[key] = idx;
            return idx;
        };
        std::vector<std::array<int, 3>> next;
        for (const auto& f : m.faces) {
            const int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        m.faces = std::move(next);
    }
    for (Vec3& v : m.vertices) v = center + v * radius;
    return m;
}

Mesh prism(const TangentLine& g, double radius, double half_length, int sides) {
    Mesh m;
    const Vec3 axis_point = g.point().vec() * (1.0 + radius);
    const Vec3 t = g.direction().vec();
    const Vec3 r1 = g.point().vec() * radius;  // radial offset back toward the generatrix
    const Vec3 r2 = cross(t, g.point().vec()) * radius;
    for (int i = 0; i < sides; ++i) {
        const double a = 2.0 * M_PI * i / sides;
        const Vec3 rim = axis_point - r1 * std::cos(a) + r2 * std::sin(a);
        m.vertices.push_back(rim - t * half_length);
        m.vertices.push_back(rim + t * half_length);
    }
    for (int i = 0; i < sides; ++i) {
        const int j = (i + 1) % sides;
        m.faces.push_back({2 * i, 2 * j, 2 * i + 1});
        m.faces.push_back({2 * j, 2 * j + 1, 2 * i + 1});
    }
    return m;
}

void emit(std::ostream& os, const std::string& name, const Mesh& m, int& vertex_base) {
    os << "o " << name << '\n';
    for (const Vec3& v : m.vertices)
        os << "v " << format_number(v.x) << ' ' << format_number(v.y) << ' '
           << format_number(v.z) << '\n';
    for (const auto& f : m.faces)
        os << "f " << vertex_base + f[0] + 1 << ' ' << vertex_base + f[1] + 1 << ' '
           << vertex_base + f[2] + 1 << '\n';
    vertex_base += static_cast<int>(m.vertices.size());
}

}  // namespace

void write_obj(std::ostream& os, const CylinderConfig& c, double radius) {
    int base = 0;
    emit(os, "unit_sphere", icosphere({0, 0, 0}, 1.0, 3), base);
    for (int i = 0; i < c.size(); ++i)
        emit(os, "cylinder_" + std::to_string(i), prism(c.generatrices[i], radius, 4.0, 32),
             base);
}

void write_obj(std::ostream& os, const BallCluster& c) {
    int base = 0;
    emit(os, "unit_sphere", icosphere({0, 0, 0}, 1.0, 3), base);
    for (int i = 0; i < c.size(); ++i)
        emit(os, "ball_" + std::to_string(i), icosphere(c.center(i), c.rho, 3), base);
}

}  // namespace io
}  // namespace unlock
