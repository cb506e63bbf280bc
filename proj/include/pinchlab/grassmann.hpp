#pragma once

#include "pinchlab/linalg.hpp"

#include <cstdint>

namespace pinchlab {

// Orthonormal basis (u, v) of a tangent 2-plane, in frame components.
struct PlaneSample {
    Vec4 u = Vec4::UnitX();
    Vec4 v = Vec4::UnitY();
};

// Gram-Schmidt a raw pair into a PlaneSample. Throws SingularFrame if the
// vectors are (numerically) dependent.
PlaneSample orthonormalized(const Vec4& u_raw, const Vec4& v_raw);

// K(plane) = <R (u ^ v), u ^ v>. Throws NonOrthonormalPlane if the basis
// fails |u| = |v| = 1, u.v = 0 beyond tolerance.
double sectional_curvature(const Mat6& op, const PlaneSample& plane,
                           double ortho_tol = 1e-10);

struct SampleExtrema {
    double max_k = 0.0;
    double min_k = 0.0;
    PlaneSample argmax;
    PlaneSample argmin;
};

// Brute-force extrema over n Haar-random planes (Gaussian pairs followed by
// orthonormalization). Deterministic for a fixed seed, independent of the
// number of worker threads.
SampleExtrema sample_extrema(const Mat6& op, std::uint64_t n_samples,
                             std::uint64_t seed = 20240915u);

struct RefineResult {
    double k = 0.0;
    PlaneSample plane;
    bool converged = false;
    int iterations = 0;
};

// Local polish of an extremum candidate: moves the plane by exponentials of
// antisymmetric generators (staying exactly on the Grassmannian), step
// halving on non-improvement; stops when the step drops below 1e-10 or after
// 10^4 iterations (returned flagged as not converged).
RefineResult refine_extrema(const Mat6& op, const PlaneSample& start, bool maximize);

} // namespace pinchlab
