#include "unlock/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace unlock {

namespace {

// any unit vector orthogonal to u
UnitVec3 orthogonal_unit(const UnitVec3& u) {
    const Vec3 trial = std::abs(u.x()) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    return UnitVec3::of(cross(u.vec(), trial));
}

// rotation taking unit vector a to unit vector b along the connecting geodesic
Rotation geodesic_rotation(const UnitVec3& a, const UnitVec3& b) {
    const Vec3 axis = cross(a.vec(), b.vec());
    const double s = norm(axis), c = dot(a, b);
    if (s < 1e-14) return Rotation();  // identical (antipodal is outside chart range)
    return Rotation(UnitVec3::of(axis), std::atan2(s, c));
}

}  // namespace

Chart::Chart(CylinderConfig base) : base_(std::move(base)) {
    for (const TangentLine& g : base_.generatrices) {
        const UnitVec3 e1 = orthogonal_unit(g.point());
        const UnitVec3 e2 = UnitVec3::of(cross(g.point().vec(), e1.vec()));
        frames_.emplace_back(e1, e2);
    }
}

CylinderConfig Chart::at(const std::vector<double>& coords) const {
    if (static_cast<int>(coords.size()) != dim())
        throw std::invalid_argument("Chart::at: wrong coordinate count");
    CylinderConfig out;
    for (int k = 0; k < base_.size(); ++k) {
        const double a = coords[3 * k], b = coords[3 * k + 1], c = coords[3 * k + 2];
        const UnitVec3& u = base_.generatrices[k].point();
        const UnitVec3& t = base_.generatrices[k].direction();
        const auto& [e1, e2] = frames_[k];

        UnitVec3 u2 = u;
        Rotation transport;
        const double rho = std::hypot(a, b);
        if (rho > 0.0) {
            const Vec3 w = (e1.vec() * a + e2.vec() * b) / rho;
            u2 = UnitVec3::of(u.vec() * std::cos(rho) + w * std::sin(rho));
            transport = geodesic_rotation(u, u2);
        }
        Vec3 t2 = Rotation(u2, c) * (transport * t.vec());
        t2 -= dot(t2, u2.vec()) * u2.vec();
        out.generatrices.emplace_back(u2, UnitVec3::of(t2));
    }
    return out;
}

std::vector<double> Chart::coords_of(const CylinderConfig& c) const {
    if (c.size() != base_.size())
        throw std::invalid_argument("Chart::coords_of: size mismatch");
    std::vector<double> coords(dim(), 0.0);
    for (int k = 0; k < base_.size(); ++k) {
        const UnitVec3& u = base_.generatrices[k].point();
        const UnitVec3& t = base_.generatrices[k].direction();
        const auto& [e1, e2] = frames_[k];
        const UnitVec3& u2 = c.generatrices[k].point();
        const UnitVec3& t2 = c.generatrices[k].direction();

        const double cu = std::clamp(dot(u, u2), -1.0, 1.0);
        // chord form is stable for small angles, unlike acos(dot)
        const double rho = 2.0 * std::asin(std::min(1.0, 0.5 * norm(u2.vec() - u.vec())));
        if (rho > 1e-15) {
            Vec3 w = u2.vec() - cu * u.vec();
            w = w / norm(w);
            coords[3 * k] = rho * dot(w, e1.vec());
            coords[3 * k + 1] = rho * dot(w, e2.vec());
        }
        const Vec3 transported = geodesic_rotation(u, u2) * t.vec();
        coords[3 * k + 2] =
            std::atan2(dot(cross(transported, t2.vec()), u2.vec()), dot(transported, t2.vec()));
    }
    return coords;
}

Matrix Chart::rotation_generators() const {
    Matrix gen(dim(), 3);
    const double h = 1e-6;
    const UnitVec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int a = 0; a < 3; ++a) {
        for (double sign : {1.0, -1.0}) {
            const Rotation r(axes[a], sign * h);
            CylinderConfig rotated;
            for (const TangentLine& g : base_.generatrices)
                rotated.generatrices.emplace_back(r * g.point(),
                                                  UnitVec3::of(r * g.direction().vec()));
            const std::vector<double> coords = coords_of(rotated);
            for (int i = 0; i < dim(); ++i) gen(i, a) += sign * coords[i] / (2.0 * h);
        }
    }
    return gen;
}

std::string family_name(ConstraintFamily f) {
    return f == ConstraintFamily::GeneratrixDistance ? "generatrix_distance" : "pairwise_radius";
}

std::vector<std::pair<int, int>> active_constraints(const CylinderConfig& c, double eps) {
    const MaxRadius r = common_radius(c);
    if (r.is_unbounded())
        throw std::invalid_argument("active_constraints: unbounded common radius");
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j) {
            const MaxRadius rij = pairwise_max_radius(c.generatrices[i], c.generatrices[j]);
            if (!rij.is_unbounded() && rij.value() <= r.value() + eps) out.emplace_back(i, j);
        }
    return out;
}

namespace {

double constraint_value(const CylinderConfig& c, std::pair<int, int> pair,
                        ConstraintFamily family) {
    const TangentLine& g1 = c.generatrices[pair.first];
    const TangentLine& g2 = c.generatrices[pair.second];
    if (family == ConstraintFamily::GeneratrixDistance) return line_distance(g1, g2);
    const MaxRadius r = pairwise_max_radius(g1, g2);
    return r.is_unbounded() ? 1e9 : r.value();
}

std::vector<double> gradient_row(const Chart& chart, std::pair<int, int> pair,
                                 ConstraintFamily family, double h) {
    const int n = chart.dim();
    std::vector<double> row(n);
    std::vector<double> x(n, 0.0);
    for (int i = 0; i < n; ++i) {
        x[i] = h;
        const double fp = constraint_value(chart.at(x), pair, family);
        x[i] = -h;
        const double fm = constraint_value(chart.at(x), pair, family);
        x[i] = 0.0;
        row[i] = (fp - fm) / (2.0 * h);
    }
    return row;
}

}  // namespace

Matrix constraint_gradients(const Chart& chart,
                            const std::vector<std::pair<int, int>>& active,
                            ConstraintFamily family) {
    const int m = static_cast<int>(active.size());
    const int n = chart.dim();
    Matrix g(m, n);
    const double h = 1e-5;
    for (int a = 0; a < m; ++a) {
        const std::vector<double> row = gradient_row(chart, active[a], family, h);
        const std::vector<double> row2 = gradient_row(chart, active[a], family, h / 2.0);
        double scale = 1e-8;
        for (double v : row2) scale = std::max(scale, std::abs(v));
        for (int i = 0; i < n; ++i) {
            if (std::abs(row[i] - row2[i]) > 1e-4 * scale)
                throw std::runtime_error(
                    "constraint_gradients: finite-difference instability at coordinate " +
                    std::to_string(i) + " of pair (" + std::to_string(active[a].first) + "," +
                    std::to_string(active[a].second) + ")");
            // Richardson extrapolation cancels the O(h^2) truncation term
            g(a, i) = (4.0 * row2[i] - row[i]) / 3.0;
        }
    }
    return g;
}

namespace {

// solve the d x d system M y = rhs by Gaussian elimination with partial
// pivoting; false if singular
bool solve_small(std::vector<std::vector<double>> m, std::vector<double> rhs,
                 std::vector<double>& y) {
    const int d = static_cast<int>(rhs.size());
    double scale = 0.0;
    for (const auto& row : m)
        for (double v : row) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return false;
    for (int col = 0; col < d; ++col) {
        int piv = col;
        for (int r = col + 1; r < d; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        // a noise-level pivot means the zeroed components are not independent:
        // the subsystem selects a face, not a vertex
        if (std::abs(m[piv][col]) < 1e-6 * scale) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int cc = col; cc < d; ++cc) m[r][cc] -= f * m[col][cc];
            rhs[r] -= f * rhs[col];
        }
    }
    y.resize(d);
    for (int i = 0; i < d; ++i) y[i] = rhs[i] / m[i][i];
    return true;
}

double dependence_residual(const Matrix& gradients, const std::vector<double>& lambda) {
    const int n = gradients.cols();
    double r2 = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int a = 0; a < gradients.rows(); ++a) s += lambda[a] * gradients(a, j);
        r2 += s * s;
    }
    return std::sqrt(r2);
}

}  // namespace

std::vector<ConvexDependence> convex_dependencies(const Matrix& gradients) {
    const int m = gradients.rows();
    if (m == 0) throw std::invalid_argument("convex_dependencies: no gradient rows");
    const int n = gradients.cols();

    // affine system: G^T lambda = 0, sum lambda = 1
    Matrix aug(n + 1, m);
    for (int a = 0; a < m; ++a) {
        for (int j = 0; j < n; ++j) aug(j, a) = gradients(a, j);
        aug(n, a) = 1.0;
    }

    // minimum-norm particular solution via the pseudo-inverse of aug^T aug
    const Matrix ata = aug.transposed() * aug;
    const SymEigen eig = jacobi_eigen(ata);
    double max_ev = 0.0;
    for (double v : eig.values) max_ev = std::max(max_ev, std::abs(v));
    std::vector<double> atb(m, 0.0);  // aug^T rhs, rhs = e_{n+1}
    for (int a = 0; a < m; ++a) atb[a] = aug(n, a);
    std::vector<double> lambda0(m, 0.0);
    for (int k = 0; k < m; ++k) {
        if (eig.values[k] < 1e-12 * std::max(1.0, max_ev)) continue;
        double proj = 0.0;
        for (int a = 0; a < m; ++a) proj += eig.vectors(a, k) * atb[a];
        proj /= eig.values[k];
        for (int a = 0; a < m; ++a) lambda0[a] += proj * eig.vectors(a, k);
    }

    // it must actually solve the system (sum = 1, gradient residual small)
    double sum0 = 0.0;
    for (double v : lambda0) sum0 += v;
    if (std::abs(sum0 - 1.0) > 1e-6 || dependence_residual(gradients, lambda0) > 1e-6)
        return {};

    // directions within the solution set: null space of aug
    const Matrix z = null_space(aug, 1e-7);
    const int d = z.cols();

    auto accept = [&](std::vector<double> lam, std::vector<ConvexDependence>& out) {
        for (double& v : lam) {
            if (v < -1e-9) return;
            v = std::max(v, 0.0);
        }
        double s = 0.0;
        for (double v : lam) s += v;
        if (s < 1e-9) return;
        for (double& v : lam) v /= s;
        const double res = dependence_residual(gradients, lam);
        if (res > 1e-8) return;
        for (const ConvexDependence& cd : out) {
            double dist = 0.0;
            for (int a = 0; a < m; ++a) dist += std::abs(cd.weights[a] - lam[a]);
            if (dist < 1e-6) return;  // duplicate vertex
        }
        out.push_back({std::move(lam), res});
    };

    std::vector<ConvexDependence> verts;
    if (d == 0) {
        accept(lambda0, verts);
        return verts;
    }
    if (d > 5)
        throw std::runtime_error("convex_dependencies: dependence space dimension " +
                                 std::to_string(d) + " exceeds enumeration cap");

    // vertices of the polytope {lambda0 + Z y : lambda >= 0}: every vertex has
    // d active components lambda_a = 0; enumerate the subsets
    std::vector<int> pick(d, 0);
    std::function<void(int, int, std::vector<int>&)> enumerate = [&](int start, int left,
                                                                     std::vector<int>& sel) {
        if (left == 0) {
            std::vector<std::vector<double>> mm(d, std::vector<double>(d));
            std::vector<double> rhs(d);
            for (int r = 0; r < d; ++r) {
                for (int cc = 0; cc < d; ++cc) mm[r][cc] = z(sel[r], cc);
                rhs[r] = -lambda0[sel[r]];
            }
            std::vector<double> y;
            if (solve_small(mm, rhs, y)) {
                std::vector<double> lam = lambda0;
                for (int a = 0; a < m; ++a)
                    for (int cc = 0; cc < d; ++cc) lam[a] += z(a, cc) * y[cc];
                accept(std::move(lam), verts);
            }
            return;
        }
        for (int a = start; a <= m - left; ++a) {
            sel.push_back(a);
            enumerate(a + 1, left - 1, sel);
            sel.pop_back();
        }
    };
    std::vector<int> sel;
    enumerate(0, d, sel);
    return verts;
}

KernelSubspace kernel_subspace(const Matrix& gradients, const Chart& chart) {
    // gradient entries carry finite-difference noise ~1e-8; singular values at
    // that scale are rank deficiencies, not genuine directions
    const Matrix raw = null_space(gradients, 1e-6);
    const Matrix rot = chart.rotation_generators();
    const Matrix e = project_out(raw, rot, 1e-6);
    return {e, raw.cols(), e.cols()};
}

namespace {

Matrix combined_hessian(const Chart& chart, const std::vector<std::pair<int, int>>& active,
                        const std::vector<double>& weights, ConstraintFamily family,
                        double h) {
    const int n = chart.dim();
    auto f = [&](const std::vector<double>& x) {
        const CylinderConfig c = chart.at(x);
        double s = 0.0;
        for (size_t a = 0; a < active.size(); ++a)
            s += weights[a] * constraint_value(c, active[a], family);
        return s;
    };
    std::vector<double> x(n, 0.0);
    const double f0 = f(x);
    Matrix hes(n, n);
    std::vector<double> fp(n), fm(n);
    for (int i = 0; i < n; ++i) {
        x[i] = h; fp[i] = f(x);
        x[i] = -h; fm[i] = f(x);
        x[i] = 0.0;
        hes(i, i) = (fp[i] + fm[i] - 2.0 * f0) / (h * h);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            x[i] = h; x[j] = h;  const double fpp = f(x);
            x[j] = -h;           const double fpm = f(x);
            x[i] = -h;           const double fmm = f(x);
            x[j] = h;            const double fmp = f(x);
            x[i] = 0.0; x[j] = 0.0;
            hes(i, j) = hes(j, i) = (fpp + fmm - fpm - fmp) / (4.0 * h * h);
        }
    return hes;
}

Matrix restrict_to(const Matrix& hes, const Matrix& basis) {
    Matrix q = basis.transposed() * (hes * basis);
    for (int i = 0; i < q.rows(); ++i)
        for (int j = i + 1; j < q.cols(); ++j) {
            const double s = 0.5 * (q(i, j) + q(j, i));
            q(i, j) = q(j, i) = s;
        }
    return q;
}

double frobenius(const Matrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

}  // namespace

std::vector<RestrictedForm> restricted_hessian_forms(
    const Chart& chart, const std::vector<std::pair<int, int>>& active,
    const std::vector<ConvexDependence>& dependencies, const Matrix& e_basis,
    ConstraintFamily family) {
    if (dependencies.empty())
        throw std::invalid_argument("restricted_hessian_forms: no dependencies");
    std::vector<RestrictedForm> forms;
    const double h = 1e-3;
    for (const ConvexDependence& dep : dependencies) {
        const Matrix q1 = restrict_to(combined_hessian(chart, active, dep.weights, family, h),
                                      e_basis);
        const Matrix q2 = restrict_to(
            combined_hessian(chart, active, dep.weights, family, h / 2.0), e_basis);
        Matrix diff = q1;
        for (int i = 0; i < diff.rows(); ++i)
            for (int j = 0; j < diff.cols(); ++j) diff(i, j) -= q2(i, j);
        const double f2 = frobenius(q2);
        if (frobenius(diff) > 1e-3 * std::max(f2, 1e-8))
            throw std::runtime_error("restricted_hessian_forms: Hessian instability (h vs h/2)");
        // Richardson extrapolation cancels the O(h^2) truncation term
        Matrix q = q2;
        for (int i = 0; i < q.rows(); ++i)
            for (int j = 0; j < q.cols(); ++j) q(i, j) = (4.0 * q2(i, j) - q1(i, j)) / 3.0;
        RestrictedForm form;
        form.frobenius = frobenius(q);
        form.q = std::move(q);
        if (form.frobenius > 0.0)
            for (int i = 0; i < form.q.rows(); ++i)
                for (int j = 0; j < form.q.cols(); ++j) form.q(i, j) /= form.frobenius;
        forms.push_back(std::move(form));
    }
    return forms;
}

std::pair<bool, double> check_negative_definite(const Matrix& q) {
    if (q.rows() == 0) return {false, 0.0};
    const SymEigen e = jacobi_eigen(q);
    const double max_ev = e.values.back();
    return {max_ev < -1e-8, max_ev};
}

InfeasibilityResult check_system_infeasible(const std::vector<RestrictedForm>& forms,
                                            int starts, std::uint64_t seed) {
    if (forms.empty()) throw std::invalid_argument("check_system_infeasible: no forms");
    const int d = forms[0].q.rows();
    InfeasibilityResult res;
    res.starts = starts;
    if (d == 0) {
        res.infeasible = true;
        res.max_min = 0.0;
        return res;
    }

    auto min_q = [&](const std::vector<double>& x) {
        double n2 = 0.0;
        for (double v : x) n2 += v * v;
        if (n2 < 1e-30) return -1e9;
        double worst = 1e18;
        for (const RestrictedForm& f : forms) {
            const std::vector<double> qx = f.q * x;
            double v = 0.0;
            for (int i = 0; i < d; ++i) v += x[i] * qx[i];
            worst = std::min(worst, v / n2);
        }
        return worst;
    };

    std::mt19937_64 rng(seed + 0xabcdef);
    std::normal_distribution<double> gauss(0.0, 1.0);
    res.max_min = -1e18;
    auto consider = [&](const std::vector<double>& x0) {
        const NelderMeadResult nm = nelder_mead_max(min_q, x0, 0.3, 1e-10, 1e-14, 2000);
        if (nm.value > res.max_min) {
            res.max_min = nm.value;
            double n2 = 0.0;
            for (double v : nm.x) n2 += v * v;
            res.witness = nm.x;
            const double nn = std::sqrt(n2);
            if (nn > 0.0)
                for (double& v : res.witness) v /= nn;
        }
    };

    for (int s = 0; s < starts; ++s) {
        std::vector<double> x(d);
        for (double& v : x) v = gauss(rng);
        consider(x);
    }
    if (d <= 3) {
        // deterministic fine grid over the sphere
        const int steps = d == 1 ? 2 : (d == 2 ? 720 : 64);
        if (d == 1) {
            consider({1.0});
        } else if (d == 2) {
            for (int i = 0; i < steps; ++i) {
                const double a = M_PI * i / steps;
                consider({std::cos(a), std::sin(a)});
            }
        } else {
            for (int i = 0; i <= steps; ++i)
                for (int j = 0; j < 2 * steps; ++j) {
                    const double th = M_PI * i / steps, ph = M_PI * j / steps;
                    consider({std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                              std::cos(th)});
                }
        }
    }
    res.infeasible = res.max_min <= 1e-8;
    return res;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::NegativeDefinite: return "NEGATIVE_DEFINITE";
        case Verdict::SystemInfeasible: return "SYSTEM_INFEASIBLE";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

namespace {

FamilyCertificate run_family(const CylinderConfig& c, ConstraintFamily family,
                             double active_eps, std::uint64_t seed) {
    FamilyCertificate cert;
    cert.family = family;
    cert.active = active_constraints(c, active_eps);
    if (cert.active.empty()) {
        cert.note = "no active constraints";
        return cert;
    }
    const Chart chart(c);
    const Matrix grads = constraint_gradients(chart, cert.active, family);
    cert.dependencies = convex_dependencies(grads);
    if (cert.dependencies.empty()) {
        cert.note = "no convex dependence among active gradients";
        return cert;
    }
    const KernelSubspace e = kernel_subspace(grads, chart);
    cert.dim_e_raw = e.dim_raw;
    cert.dim_e = e.dim;
    if (e.dim == 0) {
        cert.note = "kernel subspace E is trivial";
        return cert;
    }
    const std::vector<RestrictedForm> forms =
        restricted_hessian_forms(chart, cert.active, cert.dependencies, e.basis, family);
    for (const RestrictedForm& f : forms) {
        const SymEigen eig = jacobi_eigen(f.q);
        cert.form_min_eigenvalues.push_back(eig.values.front());
        cert.form_max_eigenvalues.push_back(eig.values.back());
    }
    if (cert.dependencies.size() == 1) {
        const auto [neg, max_ev] = check_negative_definite(forms[0].q);
        if (neg) {
            cert.verdict = Verdict::NegativeDefinite;
        } else {
            cert.note = "single dependence form not negative definite (max eigenvalue " +
                        std::to_string(max_ev) + ")";
        }
        return cert;
    }
    cert.infeasibility = check_system_infeasible(forms, 1000, seed);
    if (cert.infeasibility.infeasible) {
        cert.verdict = Verdict::SystemInfeasible;
    } else {
        cert.note = "system of restricted forms is feasible (max-min " +
                    std::to_string(cert.infeasibility.max_min) + ")";
    }
    return cert;
}

}  // namespace

RigidityCertificate rigidity_report(const CylinderConfig& c, double active_eps,
                                    std::uint64_t seed) {
    RigidityCertificate rep;
    const MaxRadius r = common_radius(c);
    if (r.is_unbounded()) throw std::invalid_argument("rigidity_report: unbounded radius");
    rep.common_radius = r.value();
    // a stability failure means the constraint functions are not differentiable
    // at this configuration (e.g. parallel axes, where the pairwise radius
    // jumps under perturbation); the certificate stays inconclusive
    auto guarded = [&](ConstraintFamily family) {
        try {
            return run_family(c, family, active_eps, seed);
        } catch (const std::runtime_error& e) {
            FamilyCertificate cert;
            cert.family = family;
            cert.note = e.what();
            return cert;
        }
    };
    rep.primary = guarded(ConstraintFamily::PairwiseRadius);
    rep.secondary = guarded(ConstraintFamily::GeneratrixDistance);
    rep.families_agree = rep.primary.active == rep.secondary.active &&
                         rep.primary.verdict == rep.secondary.verdict;
    rep.verdict = rep.primary.verdict;
    return rep;
}

}  // namespace unlock
