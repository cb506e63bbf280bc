#pragma once

#include "pinchlab/chart.hpp"
#include "pinchlab/linalg.hpp"

#include <complex>

namespace pinchlab {

using Cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Boundary points
// ---------------------------------------------------------------------------

// Point of the unit sphere S^3 in C^2; p_inf is (z1, z2) = (-1, 0).
struct BoundaryPointC {
    Cplx z1{};
    Cplx z2{};
};

// Point of the unit sphere S^3 in R^4; p_inf is (w, x, y, z) = (-1, 0, 0, 0).
struct BoundaryPointR {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;
};

// Stereographic chart centred at the north pole (projection from the south
// pole p_inf); covers the whole sphere except p_inf itself.
BoundaryPointC complex_sphere_from_stereo(const Vec3& s);
BoundaryPointR real_sphere_from_stereo(const Vec3& s);

// Tangent 4-vectors d X / d s_a of the chart map, columns of a 4x3 matrix.
Eigen::Matrix<double, 4, 3> stereo_tangents(const Vec3& s);

void require_on_sphere(const BoundaryPointC& p, double tol = 1e-12);
void require_on_sphere(const BoundaryPointR& p, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Complex model: defining function, CR structure, boundary representative
// ---------------------------------------------------------------------------

// rho = (1 - |z1|^2 - |z2|^2) / |z1 + 1|^2; zero exactly on the sphere.
// Throws PoleAtPInfinity for z1 too close to -1.
double rho_of_ball(Cplx z1, Cplx z2);

// Two complex vector fields spanning the kernel of the singular part of the
// rescaled c = 0 metric; at the boundary they span the CR distribution.
// v10 has components along (d/dz1, d/dz2), v01 along the conjugates.
struct CRFrame {
    Eigen::Vector2cd v10;
    Eigen::Vector2cd v01;
};

CRFrame cr_kernel_fields(Cplx z1, Cplx z2);

// |eta(v10)| where eta = d((1-z1)/(1+z1)) - (2 conj(z2)/(1+conj(z1))) d(z2/(1+z1));
// vanishes identically on the kernel fields.
double cr_annihilation_residual(Cplx z1, Cplx z2);

// Value of the nondegenerate second term |dZ|^2 on the CR frame (1x1 complex
// Hermitian, i.e. a positive number away from p_inf).
double cr_second_term_value(Cplx z1, Cplx z2);

// Representative (4 rho^2 g^c)|_{boundary} of the conformal class at
// infinity, as a 3x3 matrix in the stereographic chart. defining_scale s
// corresponds to replacing the defining function rho by s*rho (multiplies
// the representative by s^2).
Mat3 gc_boundary_metric(double c, const Vec3& s, double defining_scale = 1.0);

// ---------------------------------------------------------------------------
// Real model: boundary representative and the round class at b = 0
// ---------------------------------------------------------------------------

Mat3 hb_boundary_metric(double b, const Vec3& s, double defining_scale = 1.0);

// Euclidean metric of R^4 restricted to S^3, in the stereographic chart.
Mat3 round_metric_stereo(const Vec3& s);

// Max-abs deviation of rep from phi * round, phi fitted by trace matching.
double offscalar_residual(const Mat3& rep, const Mat3& round);

// ---------------------------------------------------------------------------
// Pole order at p_inf
// ---------------------------------------------------------------------------

// Least-squares fit of log(opnorm^2) against log(t) along a curve approaching
// p_inf, where t is the chordal distance to p_inf and opnorm is the operator
// norm of the boundary representative relative to the round metric; the
// reported pole order is -slope/2. t ranges over [10^-4, 10^-1].
struct PoleFit {
    double order = 0.0;
    double slope = 0.0;
    int n_points = 0;
};

PoleFit fit_pole_order_gc(double c, int n_points = 40);
PoleFit fit_pole_order_hb(double b, int n_points = 40);

// ---------------------------------------------------------------------------
// Interior consistency helpers
// ---------------------------------------------------------------------------

// Interior metric of g^c in complex-ball coordinates, assembled directly from
// the complex chart forms (no Jacobian); agrees with the pullback route.
Mat4 gc_metric_ball_direct(double c, const ChartPoint& ball);

} // namespace pinchlab
