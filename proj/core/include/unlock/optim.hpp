#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace unlock {

struct Max1D {
    double x;
    double value;
};

/// Golden-section maximization on [a, b] down to interval width xtol.
Max1D golden_section_max(const std::function<double(double)>& f, double a, double b,
                         double xtol);

/// High-accuracy 1-D maximization: coarse grid, golden section, then bisection
/// on the sign of the symmetric difference f(x+h) - f(x-h). The last stage
/// localizes both kinked and smooth maxima well past the flat-comparison
/// plateau of plain golden section.
Max1D refine_max_1d(const std::function<double(double)>& f, double a, double b,
                    int grid = 64, double xtol = 1e-12);

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    int evals;
    bool converged;
};

/// Nelder-Mead maximization (standard reflect/expand/contract/shrink).
NelderMeadResult nelder_mead_max(const std::function<double(const std::vector<double>&)>& f,
                                 const std::vector<double>& x0, double step,
                                 double xatol, double fatol, int maxiter);

/// Dense square-backed matrix, row-major; supports ragged rows counts (r x c).
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(rows * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return d_[i * cols_ + j]; }
    double operator()(int i, int j) const { return d_[i * cols_ + j]; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<double> operator*(const std::vector<double>& v) const;

  private:
    int rows_{0}, cols_{0};
    std::vector<double> d_;
};

struct SymEigen {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi eigen-decomposition of a symmetric matrix, off-diagonal
/// driven below 1e-12 of the Frobenius norm.
SymEigen jacobi_eigen(const Matrix& a);

/// Orthonormal basis (columns) of the null space of A: right singular vectors
/// of A with singular value below threshold, via jacobi_eigen(A^T A).
Matrix null_space(const Matrix& a, double sv_threshold);

/// Orthonormalize the columns of basis against the columns of `against` and
/// each other (modified Gram-Schmidt); columns falling below `drop_tol` in
/// norm are dropped.
Matrix project_out(const Matrix& basis, const Matrix& against, double drop_tol = 1e-8);

}  // namespace unlock
