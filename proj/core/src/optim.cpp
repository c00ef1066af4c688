#include "unlock/optim.hpp"

#include <algorithm>
#include <numeric>

namespace unlock {

Max1D golden_section_max(const std::function<double(double)>& f, double a, double b,
                         double xtol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a); f2 = f(x2);
        } else {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a); f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

Max1D refine_max_1d(const std::function<double(double)>& f, double a, double b,
                    int grid, double xtol) {
    if (!(b > a)) throw std::invalid_argument("refine_max_1d: empty interval");
    // coarse grid
    double best_x = a, best_f = f(a);
    for (int i = 1; i <= grid; ++i) {
        const double x = a + (b - a) * i / grid;
        const double v = f(x);
        if (v > best_f) { best_f = v; best_x = x; }
    }
    const double cell = (b - a) / grid;
    double lo = std::max(a, best_x - cell), hi = std::min(b, best_x + cell);
    Max1D g = golden_section_max(f, lo, hi, 1e-4);

    // bisect the sign of the symmetric difference f(x+h) - f(x-h) around the
    // golden estimate, in stages of shrinking h: at a kinked maximum the
    // symmetric difference carries an O(h) bias, so h must shrink with the
    // bracket to keep localizing
    double x = g.x;
    double bracket = 2e-4;
    bool refined = false;
    bool noisy = false;
    const double noise_floor = 3e-16;  // below this the difference is evaluation noise
    for (double h : {1e-6, 1e-8, 1e-10}) {
        if (h < xtol || noisy) break;
        auto slope = [&](double xx) { return f(xx + h) - f(xx - h); };
        lo = std::max(a, x - bracket);
        hi = std::min(b, x + bracket);
        if (!(slope(lo) > 0.0 && slope(hi) < 0.0)) break;
        const double width = std::max(4.0 * h, xtol);
        while (hi - lo > width) {
            const double mid = 0.5 * (lo + hi);
            const double s = slope(mid);
            if (std::abs(s) < noise_floor) {
                lo = hi = mid;
                noisy = true;
                break;
            }
            (s > 0.0 ? lo : hi) = mid;
        }
        x = 0.5 * (lo + hi);
        bracket = 8.0 * (hi - lo);
        refined = true;
    }
    if (refined) {
        const double fx = f(x);
        if (fx >= g.value) return {x, fx};
    }
    // interior maximum not bracketed (flat or boundary); keep the golden result
    Max1D fine = golden_section_max(f, std::max(a, g.x - 1e-4), std::min(b, g.x + 1e-4), xtol);
    return fine.value > g.value ? fine : g;
}

NelderMeadResult nelder_mead_max(const std::function<double(const std::vector<double>&)>& f,
                                 const std::vector<double>& x0, double step,
                                 double xatol, double fatol, int maxiter) {
    const int n = static_cast<int>(x0.size());
    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return -f(x);  // minimize -f
    };

    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (int i = 0; i < n; ++i) simplex[i + 1][i] += step;
    std::vector<double> fv(n + 1);
    for (int i = 0; i <= n; ++i) fv[i] = eval(simplex[i]);

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    bool converged = false;

    while (evals < maxiter) {
        std::vector<int> order(n + 1);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int i, int j) { return fv[i] < fv[j]; });
        {
            std::vector<std::vector<double>> s2;
            std::vector<double> f2;
            for (int i : order) { s2.push_back(simplex[i]); f2.push_back(fv[i]); }
            simplex = std::move(s2);
            fv = std::move(f2);
        }

        double xspread = 0.0;
        for (int i = 1; i <= n; ++i)
            for (int j = 0; j < n; ++j)
                xspread = std::max(xspread, std::abs(simplex[i][j] - simplex[0][j]));
        if (xspread < xatol && std::abs(fv[n] - fv[0]) < fatol) { converged = true; break; }

        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) centroid[j] += simplex[i][j] / n;

        auto blend = [&](double c) {
            std::vector<double> x(n);
            for (int j = 0; j < n; ++j) x[j] = centroid[j] + c * (simplex[n][j] - centroid[j]);
            return x;
        };

        const std::vector<double> xr = blend(-alpha);
        const double fr = eval(xr);
        if (fr < fv[0]) {
            const std::vector<double> xe = blend(-gamma);
            const double fe = eval(xe);
            if (fe < fr) { simplex[n] = xe; fv[n] = fe; }
            else { simplex[n] = xr; fv[n] = fr; }
        } else if (fr < fv[n - 1]) {
            simplex[n] = xr; fv[n] = fr;
        } else {
            const std::vector<double> xc = blend(fr < fv[n] ? -rho : rho);
            const double fc = eval(xc);
            if (fc < std::min(fr, fv[n])) { simplex[n] = xc; fv[n] = fc; }
            else {
                for (int i = 1; i <= n; ++i) {
                    for (int j = 0; j < n; ++j)
                        simplex[i][j] = simplex[0][j] + sigma * (simplex[i][j] - simplex[0][j]);
                    fv[i] = eval(simplex[i]);
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;
    return {simplex[best], -fv[best], evals, converged};
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

std::vector<double> Matrix::operator*(const std::vector<double>& v) const {
    if (cols_ != static_cast<int>(v.size()))
        throw std::invalid_argument("Matrix-vector multiply: shape mismatch");
    std::vector<double> r(rows_, 0.0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

SymEigen jacobi_eigen(const Matrix& m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("jacobi_eigen: matrix not square");
    Matrix a = m;
    Matrix v(n, n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;

    double fro = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fro += a(i, j) * a(i, j);
    fro = std::sqrt(fro);
    const double tol = std::max(1e-300, 1e-12 * fro);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
        if (std::sqrt(off) < tol) break;

        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    SymEigen e;
    e.values.resize(n);
    e.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        e.values[k] = a(order[k], order[k]);
        for (int i = 0; i < n; ++i) e.vectors(i, k) = v(i, order[k]);
    }
    return e;
}

Matrix null_space(const Matrix& a, double sv_threshold) {
    const int n = a.cols();
    if (a.rows() == 0) {
        Matrix id(n, n);
        for (int i = 0; i < n; ++i) id(i, i) = 1.0;
        return id;
    }
    const Matrix ata = a.transposed() * a;
    const SymEigen e = jacobi_eigen(ata);
    int k = 0;
    while (k < n && std::sqrt(std::max(0.0, e.values[k])) < sv_threshold) ++k;
    Matrix basis(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) basis(i, j) = e.vectors(i, j);
    return basis;
}

Matrix project_out(const Matrix& basis, const Matrix& against, double drop_tol) {
    const int n = basis.rows();
    std::vector<std::vector<double>> kept;
    auto col = [](const Matrix& m, int j) {
        std::vector<double> c(m.rows());
        for (int i = 0; i < m.rows(); ++i) c[i] = m(i, j);
        return c;
    };
    std::vector<std::vector<double>> fixed;
    for (int j = 0; j < against.cols(); ++j) {
        auto c = col(against, j);
        for (const auto& f : fixed) {
            const double d = std::inner_product(c.begin(), c.end(), f.begin(), 0.0);
            for (int i = 0; i < n; ++i) c[i] -= d * f[i];
        }
        const double nn = std::sqrt(std::inner_product(c.begin(), c.end(), c.begin(), 0.0));
        if (nn > 1e-14) {
            for (double& x : c) x /= nn;
            fixed.push_back(c);
        }
    }
    for (int j = 0; j < basis.cols(); ++j) {
        auto c = col(basis, j);
        for (const auto& f : fixed) {
            const double d = std::inner_product(c.begin(), c.end(), f.begin(), 0.0);
            for (int i = 0; i < n; ++i) c[i] -= d * f[i];
        }
        for (const auto& kcol : kept) {
            const double d = std::inner_product(c.begin(), c.end(), kcol.begin(), 0.0);
            for (int i = 0; i < n; ++i) c[i] -= d * kcol[i];
        }
        const double nn = std::sqrt(std::inner_product(c.begin(), c.end(), c.begin(), 0.0));
        if (nn > drop_tol) {
            for (double& x : c) x /= nn;
            kept.push_back(c);
        }
    }
    Matrix out(n, static_cast<int>(kept.size()));
    for (size_t j = 0; j < kept.size(); ++j)
        for (int i = 0; i < n; ++i) out(i, static_cast<int>(j)) = kept[j][i];
    return out;
}

}  // namespace unlock
