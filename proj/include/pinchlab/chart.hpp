#pragma once

#include "pinchlab/linalg.hpp"

#include <string>

namespace pinchlab {

enum class Chart {
    HalfSpace,    // (rho, phi, zeta0, zetat0), rho > 0
    ComplexBall,  // (Re z1, Im z1, Re z2, Im z2), |z1|^2 + |z2|^2 < 1
    RealBall,     // (w, x, y, z), w^2 + x^2 + y^2 + z^2 < 1
    PedersenPolar // (varrho, theta, phi, psi), varrho in (0,1), theta in (0,pi)
};

std::string chart_name(Chart chart);

struct ChartPoint {
    Chart chart = Chart::HalfSpace;
    Vec4 coords = Vec4::Zero();
};

// Margin used by all strict domain inequalities (stencil safety).
inline constexpr double kDomainMargin = 1e-10;

bool in_domain(const ChartPoint& p, double margin = kDomainMargin);

// Throws DomainViolation if the point lies outside its chart domain.
void require_in_domain(const ChartPoint& p, double margin = kDomainMargin);

ChartPoint half_space_point(double rho, double phi, double zeta0, double zetat0);
ChartPoint complex_ball_point(double re_z1, double im_z1, double re_z2, double im_z2);
ChartPoint real_ball_point(double w, double x, double y, double z);
ChartPoint pedersen_point(double varrho, double theta, double phi, double psi);

} // namespace pinchlab
