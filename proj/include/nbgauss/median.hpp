#ifndef NBGAUSS_MEDIAN_HPP
#define NBGAUSS_MEDIAN_HPP

#include <span>
#include <variant>
#include <vector>

#include "nbgauss/exactdist.hpp"

namespace nbgauss {

/// Exact versus asymptotic median of a variable jittered by Uniform(0, 1).
struct MedianReport {
    double exact;
    double asymptotic;
    double residual;  ///< exact - asymptotic
    std::variant<NBParams, PoissonParams> params;
};

// The jittered law K + U has the continuous, piecewise-linear distribution
// function G(t) = F(floor t) {t} + F(floor t - 1) (1 - {t}). Its median is
// therefore found exactly: bracket the integer cell where F crosses 1/2 and
// interpolate inside it.

/// P(K + U <= t) for K ~ NB(r, p), U ~ Uniform(0, 1).
double jittered_cdf_nb(const NBParams& params, double t);

/// P(N + U <= t) for N ~ Poisson(lambda).
double jittered_cdf_poisson(const PoissonParams& params, double t);

double exact_jittered_median_nb(const NBParams& params);

/// rp/q + 1/2 - (1 + p) / (6q).
double asymptotic_jittered_median_nb(const NBParams& params);

double exact_jittered_median_poisson(const PoissonParams& params);

/// lambda + 1/3.
double asymptotic_jittered_median_poisson(const PoissonParams& params);

MedianReport median_report_nb(const NBParams& params);
MedianReport median_report_poisson(const PoissonParams& params);

/// One point of a median scan over r.
struct MedianScanRow {
    double r;
    double integer_median_minus_mean;  ///< unjittered Med(K) - rp/q
    MedianReport report;
};

/// Median reports for each r in the grid at fixed p. Rows come back in grid
/// order. Throws std::domain_error for an empty or non-ascending grid.
std::vector<MedianScanRow> median_scan(double p, std::span<const double> r_grid);

}  // namespace nbgauss

#endif  // NBGAUSS_MEDIAN_HPP
