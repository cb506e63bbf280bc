#pragma once

#include "pinchlab/cartan.hpp"
#include "pinchlab/chart.hpp"
#include "pinchlab/families.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pinchlab {

// One cross-check over a parameter grid: worst residual vs tolerance.
struct CheckResult {
    std::string name;
    double worst = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;

    void add(const std::string& name, double worst, double tol);
};

struct VerifyOptions {
    FdOptions fd;                      // set up by default_verify_fd()
    std::uint64_t oracle_samples = 200000;
    std::uint64_t seed = 20240915u;
};

// Default grids for the verification suites.
std::vector<double> default_c_grid();         // {0, 0.1, 1, 10}
std::vector<double> default_rho_tilde_grid(); // {0.01, 0.1, 1, 2, 10, 100}
std::vector<double> default_varrho_grid();    // {0.1, 0.3, 0.5, 0.7, 0.9}
std::vector<double> default_m2_grid();        // {0, 0.5, 1, 8}

// Generic interior points used by the grids (the metrics depend only on the
// radial coordinate; the remaining coordinates are fixed at generic values).
ChartPoint default_half_space_point(double rho);
ChartPoint default_pedersen_point(double varrho);

// Finite-difference policy for the suites: base step 1e-4, Richardson on,
// and per-coordinate steps scaled to the radial coordinate where the chart
// geometry shrinks with it.
FdOptions default_verify_fd(Chart chart);

// Suites. Each runs closed-form-vs-numeric, spectrum, Einstein, Weyl-half,
// and extrema-oracle checks over its grid and reports the worst residuals.
VerifyReport verify_oneloop(double c, const std::vector<double>& rho_tildes,
                            const VerifyOptions& opts);
VerifyReport verify_hb(double b, const std::vector<double>& rhos,
                       const VerifyOptions& opts);
VerifyReport verify_pedersen(double m2, const std::vector<double>& varrhos,
                             const VerifyOptions& opts);

} // namespace pinchlab
