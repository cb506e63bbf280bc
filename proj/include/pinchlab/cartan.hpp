#pragma once

#include "pinchlab/chart.hpp"
#include "pinchlab/linalg.hpp"

#include <array>
#include <functional>

namespace pinchlab {

using CovectorField = std::function<Vec4(const ChartPoint&)>;
using TwoFormField = std::function<Mat4(const ChartPoint&)>;
using CoframeField = std::function<Mat4(const ChartPoint&)>;

// Finite-difference controls. The default per-coordinate step is
// step * max(1, |x_mu|); a custom step_rule overrides it (needed near the
// small-rho end of a chart, where the geometry's natural scale shrinks with
// the coordinate). Richardson extrapolation cancels the leading O(step^2)
// truncation term at twice the stencil cost.
struct FdOptions {
    double step = 1e-5;
    bool richardson = false;
    std::function<Vec4(const ChartPoint&)> step_rule{};
};

Vec4 fd_steps(const ChartPoint& p, const FdOptions& opts);

// Exterior derivative of a covector field at p, as an antisymmetric 4x4 of
// coordinate components (d omega)_{mu nu}. Central differences, error
// O(step^2); throws DomainViolation if a stencil point leaves the chart.
Mat4 exterior_derivative(const CovectorField& field, const ChartPoint& p,
                         const FdOptions& opts = {});

// Exterior derivative of a 2-form field (antisymmetric coordinate comps).
// Component m of the result is (d beta)_{ijk} for {i,j,k} = {0..3} \ {m},
// indices ascending.
Vec4 exterior_derivative(const TwoFormField& field, const ChartPoint& p,
                         const FdOptions& opts = {});

// so(4)-valued connection 1-form at a point, coordinate components.
struct ConnectionAtPoint {
    std::array<std::array<Vec4, 4>, 4> omega{};

    const Vec4& operator()(int i, int j) const { return omega[i][j]; }
};

// Solves the first structure equation d theta^I = sum_J theta^J ^ omega^I_J
// for the unique antisymmetric omega, via structure coefficients and the
// frame Koszul formula omega_{IJ,K} = (c_{IJK} + c_{JKI} - c_{KIJ}) / 2.
ConnectionAtPoint solve_connection(const CoframeField& coframe, const ChartPoint& p,
                                   const FdOptions& opts = {});

// Curvature 2-forms Omega^I_J = d omega^I_J - sum_K omega^K_J ^ omega^I_K,
// expressed in the frame 2-form basis.
struct CurvatureForms {
    std::array<std::array<Vec6, 4>, 4> omega_theta{};

    const Vec6& operator()(int i, int j) const { return omega_theta[i][j]; }
};

CurvatureForms curvature_forms(const CoframeField& coframe, const ChartPoint& p,
                               const FdOptions& opts = {});

// Curvature operator on Lambda^2: column for theta^I ^ theta^J is Omega^I_J.
// The raw matrix is symmetrized; the pre-symmetrization asymmetry is kept as
// a diagnostic and AsymmetryExceeded is thrown when it exceeds asym_tol.
struct CurvatureOperator {
    Mat6 matrix = Mat6::Zero();
    double asymmetry = 0.0;
};

CurvatureOperator curvature_operator(const CurvatureForms& forms, double asym_tol = 1e-6);

// Residual of the first structure equation with the solved connection,
// measured in the frame 2-form basis (max abs component over I).
double structure_equation_residual(const CoframeField& coframe, const ChartPoint& p,
                                   const FdOptions& opts = {});

// Same residual but against an externally supplied connection (e.g. a closed
// form); measures finite-difference accuracy rather than solver consistency.
double structure_equation_residual(const CoframeField& coframe, const ChartPoint& p,
                                   const ConnectionAtPoint& conn, const FdOptions& opts = {});

} // namespace pinchlab
