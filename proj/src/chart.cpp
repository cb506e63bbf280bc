#include "pinchlab/chart.hpp"

#include "pinchlab/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace pinchlab {

std::string chart_name(Chart chart) {
    switch (chart) {
    case Chart::HalfSpace: return "half_space";
    case Chart::ComplexBall: return "complex_ball";
    case Chart::RealBall: return "real_ball";
    case Chart::PedersenPolar: return "pedersen_polar";
    }
    return "unknown";
}

bool in_domain(const ChartPoint& p, double margin) {
    const Vec4& x = p.coords;
    switch (p.chart) {
    case Chart::HalfSpace:
        return x[0] > margin;
    case Chart::ComplexBall:
        return x.squaredNorm() < 1.0 - margin;
    case Chart::RealBall:
        return x.squaredNorm() < 1.0 - margin;
    case Chart::PedersenPolar:
        return x[0] > margin && x[0] < 1.0 - margin && x[1] > margin &&
               x[1] < std::numbers::pi - margin;
    }
    return false;
}

void require_in_domain(const ChartPoint& p, double margin) {
    if (!in_domain(p, margin)) {
        std::ostringstream msg;
        msg << "point outside " << chart_name(p.chart) << " domain: (" << p.coords[0]
            << ", " << p.coords[1] << ", " << p.coords[2] << ", " << p.coords[3] << ")";
        throw DomainViolation(msg.str());
    }
}

ChartPoint half_space_point(double rho, double phi, double zeta0, double zetat0) {
    return {Chart::HalfSpace, Vec4(rho, phi, zeta0, zetat0)};
}

ChartPoint complex_ball_point(double re_z1, double im_z1, double re_z2, double im_z2) {
    return {Chart::ComplexBall, Vec4(re_z1, im_z1, re_z2, im_z2)};
}

ChartPoint real_ball_point(double w, double x, double y, double z) {
    return {Chart::RealBall, Vec4(w, x, y, z)};
}

ChartPoint pedersen_point(double varrho, double theta, double phi, double psi) {
    return {Chart::PedersenPolar, Vec4(varrho, theta, phi, psi)};
}

} // namespace pinchlab
