#pragma once

#include "pinchlab/cartan.hpp"
#include "pinchlab/chart.hpp"
#include "pinchlab/linalg.hpp"

#include <complex>
#include <utility>

namespace pinchlab {

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

struct OneLoopParams {
    double c = 0.0; // deformation parameter, c >= 0
};

struct HbParams {
    double b = 0.0; // b >= 0; for b > 0 equivalent to OneLoopParams{1/b}
};

struct PedersenParams {
    double m2 = 0.0; // squared parameter m^2 >= 0
};

enum class Family { OneLoop, Hb, Pedersen };

struct FamilySpec {
    Family family = Family::OneLoop;
    double c = 0.0;
    double b = 0.0;
    double m2 = 0.0;
};

// ---------------------------------------------------------------------------
// One-loop family on the half-space chart (rho, phi, zeta0, zetat0)
// ---------------------------------------------------------------------------

// Radial coframe coefficients. Identities: F*G = 1/(4 rho^2),
// H^2 = 2(rho + 2c)/(4 rho^2); all positive for rho > 0.
struct AuxFGH {
    double F = 0.0;
    double G = 0.0;
    double H = 0.0;
};

AuxFGH oneloop_fgh(double rho, double c);

Mat4 oneloop_metric(double c, const ChartPoint& p);
Mat4 oneloop_coframe(double c, const ChartPoint& p);
CoframeField oneloop_coframe_field(double c);

// Closed-form Levi-Civita connection of the one-loop family.
ConnectionAtPoint oneloop_connection(double c, const ChartPoint& p);

// Closed-form curvature 2-forms, organized around the three radial
// amplitudes a1, a2, a3 (rational functions of rho with a1 - a2 = -3 a3).
struct OneLoopCurvature {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    CurvatureForms forms;
};

OneLoopCurvature oneloop_curvature(double c, const ChartPoint& p);

// ---------------------------------------------------------------------------
// h^b family on the (primed) half-space chart
// ---------------------------------------------------------------------------

Mat4 hb_metric(double b, const ChartPoint& p);
Mat4 hb_coframe(double b, const ChartPoint& p);
CoframeField hb_coframe_field(double b);

// Evaluates both sides of the b > 0 equivalence with the one-loop family:
// first = h^b at p, second = pullback of g^{1/b} under
// (rho, phi, zeta0, zetat0) = (rho', phi', sqrt(b) zeta'^0, sqrt(b) zetat'_0).
std::pair<Mat4, Mat4> hb_pullback_check(double b, const ChartPoint& primed);

// ---------------------------------------------------------------------------
// Pedersen family on the polar chart (varrho, theta, phi, psi)
// ---------------------------------------------------------------------------

// Left-invariant coframe sigma_1..3 on S^3, normalized so that
// d sigma_i = sum_{jk} eps_{ijk} sigma_j ^ sigma_k. Rows of the returned
// matrix are the three sigma's in the (varrho, theta, phi, psi) basis.
Eigen::Matrix<double, 3, 4> sigma_forms(const ChartPoint& p);

Mat4 pedersen_metric(double m2, const ChartPoint& p);
Mat4 pedersen_coframe(double m2, const ChartPoint& p);
CoframeField pedersen_coframe_field(double m2);

// ---------------------------------------------------------------------------
// Chart changes (half-space <-> ball models)
// ---------------------------------------------------------------------------

// Half-space -> unit ball in C^2; inverse map. Mutually inverse
// diffeomorphisms; rho = (1 - |z1|^2 - |z2|^2) / |z1 + 1|^2.
ChartPoint to_complex_ball(const ChartPoint& half_space);
ChartPoint from_complex_ball(const ChartPoint& ball);

// Primed half-space -> unit ball in R^4; inverse map. p_inf corresponds to
// (w, x, y, z) = (-1, 0, 0, 0).
ChartPoint to_real_ball(const ChartPoint& half_space_primed);
ChartPoint from_real_ball(const ChartPoint& ball);

// Complex-chart derivative data at (z1, z2), shared by the ball-chart
// pullbacks and the boundary analysis. With m = (1 - z1)/(1 + z1) and
// Z = z2/(1 + z1):
//   dm = m1 dz1,   dZ = Z1 dz1 + Z2 dz2,
//   eta = dm - 2 conj(Z) dZ = P dz1 + Q dz2.
struct ComplexChartForms {
    std::complex<double> m1;
    std::complex<double> Z1, Z2;
    std::complex<double> P, Q;
    double rho = 0.0;
};

ComplexChartForms complex_chart_forms(std::complex<double> z1, std::complex<double> z2);

// Jacobians d(half-space coords)/d(ball coords) of the inverse chart maps.
Mat4 complex_ball_jacobian(const ChartPoint& ball);
Mat4 real_ball_jacobian(const ChartPoint& ball);

// Pullbacks of the metrics and coframes to the ball charts.
Mat4 oneloop_metric_complex_ball(double c, const ChartPoint& ball);
CoframeField oneloop_coframe_field_complex_ball(double c);
Mat4 hb_metric_real_ball(double b, const ChartPoint& ball);
CoframeField hb_coframe_field_real_ball(double b);

// ---------------------------------------------------------------------------
// Dispatch helpers (CLI / verification drivers)
// ---------------------------------------------------------------------------

Mat4 metric_at(const FamilySpec& spec, const ChartPoint& p);
Mat4 coframe_at(const FamilySpec& spec, const ChartPoint& p);
CoframeField coframe_field(const FamilySpec& spec);

} // namespace pinchlab
