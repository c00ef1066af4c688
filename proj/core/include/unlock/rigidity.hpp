#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unlock/cylinders.hpp"
#include "unlock/optim.hpp"

namespace unlock {

/// Local chart on the configuration manifold of n tangent lines (dimension
/// 3n). Cylinder k carries coordinates (a, b, c) at indices 3k..3k+2:
/// (a, b) move the tangent point along the sphere's geodesic exponential in
/// an orthonormal tangent frame, c twists the direction about the radial
/// axis after the tangent point is transported. The origin reproduces the
/// base configuration exactly.
class Chart {
  public:
    explicit Chart(CylinderConfig base);

    int dim() const { return 3 * base_.size(); }
    const CylinderConfig& base() const { return base_; }

    CylinderConfig at(const std::vector<double>& coords) const;
    std::vector<double> coords_of(const CylinderConfig& c) const;

    /// The three global-rotation generator directions in chart coordinates,
    /// as columns (3n x 3), by differentiating the rotation action.
    Matrix rotation_generators() const;

  private:
    CylinderConfig base_;
    std::vector<std::pair<UnitVec3, UnitVec3>> frames_;  // (e1, e2) per cylinder
};

enum class ConstraintFamily { GeneratrixDistance, PairwiseRadius };
std::string family_name(ConstraintFamily f);

/// Pairs within eps of the common radius.
std::vector<std::pair<int, int>> active_constraints(const CylinderConfig& c, double eps);

/// Central finite-difference gradients (step 1e-5, stability-checked against
/// step/2) of the active constraint functions over the chart coordinates.
/// One row per active pair.
Matrix constraint_gradients(const Chart& chart,
                            const std::vector<std::pair<int, int>>& active,
                            ConstraintFamily family);

struct ConvexDependence {
    std::vector<double> weights;  // >= 0, sum 1
    double residual{};            // ||G^T lambda||
};

/// All extreme points of {lambda >= 0, sum lambda = 1, G^T lambda = 0}
/// (the convex dependencies of the gradient rows). Empty if none exists.
std::vector<ConvexDependence> convex_dependencies(const Matrix& gradients);

struct KernelSubspace {
    Matrix basis;          // orthonormal columns spanning E
    int dim_raw{};         // null-space dimension before the rotation quotient
    int dim{};             // dim(E) after projecting out global rotations
};

/// Null space of the gradient matrix (singular values below 1e-8), minus the
/// three global-rotation directions.
KernelSubspace kernel_subspace(const Matrix& gradients, const Chart& chart);

/// Quadratic form on E: the dependence-weighted sum of constraint Hessians,
/// restricted to the kernel basis and normalized to unit Frobenius norm.
struct RestrictedForm {
    Matrix q;              // dim(E) x dim(E), symmetric
    double frobenius{};    // norm before normalization
};

std::vector<RestrictedForm> restricted_hessian_forms(
    const Chart& chart, const std::vector<std::pair<int, int>>& active,
    const std::vector<ConvexDependence>& dependencies, const Matrix& e_basis,
    ConstraintFamily family);

/// Eigenvalues by cyclic Jacobi; true iff the largest is < -1e-8.
std::pair<bool, double> check_negative_definite(const Matrix& q);

struct InfeasibilityResult {
    bool infeasible{};
    double max_min{};              // attained max of min_i q_i over the unit sphere
    std::vector<double> witness;   // best x either way
    int starts{};
};

/// Maximize min_i q_i(x) over the unit sphere of E: seeded multi-start local
/// search plus a deterministic fine grid when dim(E) <= 3. Infeasible iff the
/// attained maximum is <= 1e-8.
InfeasibilityResult check_system_infeasible(const std::vector<RestrictedForm>& forms,
                                            int starts = 1000,
                                            std::uint64_t seed = 0);

enum class Verdict { NegativeDefinite, SystemInfeasible, Inconclusive };
std::string verdict_name(Verdict v);

struct FamilyCertificate {
    ConstraintFamily family;
    std::vector<std::pair<int, int>> active;
    std::vector<ConvexDependence> dependencies;
    int dim_e_raw{};
    int dim_e{};
    std::vector<double> form_max_eigenvalues;
    std::vector<double> form_min_eigenvalues;
    InfeasibilityResult infeasibility;  // populated when >= 2 dependencies
    Verdict verdict{Verdict::Inconclusive};
    std::string note;
};

struct RigidityCertificate {
    double common_radius{};
    FamilyCertificate primary;    // PAIRWISE_RADIUS, the function that is maximized
    FamilyCertificate secondary;  // GENERATRIX_DISTANCE, mirroring the analysis
    bool families_agree{};        // same active set and verdict
    Verdict verdict{Verdict::Inconclusive};
};

/// Full pipeline: active set, dependencies, kernel, restricted forms, checks.
/// Runs both constraint families and compares them; the verdict is the
/// primary family's.
RigidityCertificate rigidity_report(const CylinderConfig& c, double active_eps = 1e-6,
                                    std::uint64_t seed = 0);

}  // namespace unlock
