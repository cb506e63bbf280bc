#pragma once

#include "pinchlab/chart.hpp"
#include "pinchlab/linalg.hpp"

#include <array>
#include <optional>
#include <string>

namespace pinchlab {

// ---------------------------------------------------------------------------
// Closed-form spectra of the curvature operator
// ---------------------------------------------------------------------------

// One-loop family. The self-dual eigenvalues are lambda_plus_234 (simple)
// and lambda_plus_342 (double); the anti-self-dual eigenvalue is the triple
// lambda_minus_common = -2 independently of the parameters.
struct SpectrumOneLoop {
    double lambda_plus_234 = 0.0;
    double lambda_minus_common = -2.0;
    double lambda_plus_342 = 0.0;

    std::array<double, 3> sd_triple() const {
        return {lambda_plus_234, lambda_plus_342, lambda_plus_342};
    }
    std::array<double, 3> asd_triple() const {
        return {lambda_minus_common, lambda_minus_common, lambda_minus_common};
    }
};

// c > 0 branch: depends only on rho_tilde = rho/c, through t = rt/(rt + 2).
SpectrumOneLoop spectrum_oneloop(double rho_tilde);

// c = 0 branch: rho-independent spectrum (-6, -2, 0).
SpectrumOneLoop spectrum_oneloop_degenerate();

// Shared form valid for all c >= 0, through t = rho/(rho + 2c).
SpectrumOneLoop spectrum_oneloop_rho(double rho, double c);

// Pedersen family. nu_plus is the self-dual triple (-4, exactly); the
// anti-self-dual eigenvalues are nu_minus_123 (simple) and nu_minus_231
// (double), controlled by mu = m^2 (1 - vr^2)^3 / (m^2 vr^2 + 1)^3.
struct SpectrumPedersen {
    double nu_plus = -4.0;
    double nu_minus_123 = 0.0;
    double nu_minus_231 = 0.0;

    std::array<double, 3> sd_triple() const { return {nu_plus, nu_plus, nu_plus}; }
    std::array<double, 3> asd_triple() const {
        return {nu_minus_123, nu_minus_231, nu_minus_231};
    }
};

SpectrumPedersen spectrum_pedersen(double varrho, double m2);

// ---------------------------------------------------------------------------
// Sectional-curvature extrema and pinching
// ---------------------------------------------------------------------------

struct Extrema {
    double max_k = 0.0;
    double min_k = 0.0;
};

// Pointwise sectional extrema from the duality-labeled eigenvalue triples:
// max K = (max SD + max ASD)/2, min K = (min SD + min ASD)/2. Valid for
// operators that preserve the duality splitting (Einstein metrics).
Extrema sectional_extrema(const std::array<double, 3>& sd_triple,
                          const std::array<double, 3>& asd_triple);

// Pinching ratio max K / min K of the one-loop family as a function of
// rho_tilde; lies in (1/4, 1) and attains the endpoints asymptotically.
double pinching_oneloop(double rho_tilde);

// ---------------------------------------------------------------------------
// Ricci / Weyl extraction from an operator matrix
// ---------------------------------------------------------------------------

// Rc_{IJ} = sum_K < R(theta^I ^ theta^K), theta^J ^ theta^K >.
Mat4 ricci_from_operator(const Mat6& op);

struct WeylSplit {
    Mat6 weyl = Mat6::Zero();
    Mat3 sd_block = Mat3::Zero();
    Mat3 asd_block = Mat3::Zero();
    Mat3 mixed_block = Mat3::Zero(); // SD rows x ASD columns
};

// W = R - (1/2) Rc ^ id + (1/3) tr(R) id, with the duality blocks attached.
WeylSplit weyl_from_operator(const Mat6& op);

// Duality-labeled blocks and eigenvalues of a symmetric operator on Lambda^2.
struct DualitySplit {
    Mat3 sd_block = Mat3::Zero();
    Mat3 asd_block = Mat3::Zero();
    Mat3 mixed_block = Mat3::Zero();
    Vec3 sd_eigs = Vec3::Zero();  // ascending
    Vec3 asd_eigs = Vec3::Zero(); // ascending
};

DualitySplit duality_split(const Mat6& op);

// ---------------------------------------------------------------------------
// Pedersen sign classification
// ---------------------------------------------------------------------------

enum class PedersenSign { AllNegative, ZeroAtOrigin, MixedSigns };

std::string pedersen_sign_name(PedersenSign s);

struct PedersenNegativity {
    PedersenSign classification = PedersenSign::AllNegative;
    // Radius (squared) below which max K is nonnegative; defined for m2 >= 1.
    std::optional<double> rho2_crit;
};

// AllNegative iff m2 < 1, ZeroAtOrigin iff m2 = 1, MixedSigns iff m2 > 1,
// with threshold vr^2 <= (m^{2/3} - 1) / (m^2 + m^{2/3}).
PedersenNegativity pedersen_negativity(double m2);

// ---------------------------------------------------------------------------
// Per-point report
// ---------------------------------------------------------------------------

struct PinchingReport {
    double max_k = 0.0;
    double min_k = 0.0;
    // Ratio max K / min K; only defined at negative-curvature points.
    std::optional<double> delta;
    std::optional<PedersenSign> classification;
    ChartPoint location;
    Vec6 spectrum = Vec6::Zero(); // (SD triple, ASD triple)
};

PinchingReport make_pinching_report(const std::array<double, 3>& sd_triple,
                                    const std::array<double, 3>& asd_triple,
                                    const ChartPoint& location,
                                    std::optional<PedersenSign> classification = {});

} // namespace pinchlab
