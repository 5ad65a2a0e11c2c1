#ifndef NBGAUSS_CORRECTION_HPP
#define NBGAUSS_CORRECTION_HPP

#include <cstdint>

#include "nbgauss/exactdist.hpp"

namespace nbgauss {

/// The continuity correction at summation boundary a.
struct CorrectionPoint {
    std::int64_t a;
    double c_star;
    double delta_tilde;  ///< delta at a - 1/2
};

/// Refined continuity correction c*(a) such that
///
///     P(K >= a) = Psi(delta_{a - c*(a)}) + O(r^-3/2).
///
/// With d = delta_{a - 1/2}:
///
///     c*(a) = 1/2 + (1 + p) / (6 q) (d^2 - 1)
///             - [ (5 + 4p + 5p^2) d^3 / 72 - (1 - p + p^2) d / 36 ] / (q sqrt(r p))
///
/// The bracketed r^(-1/2) term comes from matching the second-order lattice
/// Edgeworth expansion of the tail (fourth cumulant, squared skewness and
/// the 1/(24 sd^2) rounding term); the error then decays like r^-3/2 at any
/// fixed delta.
CorrectionPoint c_star(const NBParams& params, std::int64_t a);

/// Psi(delta_{a - c*(a)}), approximating P(K >= a).
double corrected_survival(const NBParams& params, std::int64_t a);

/// Phi(delta_{a + 1 - c*(a + 1)}), approximating P(K <= a).
double corrected_cdf(const NBParams& params, std::int64_t a);

/// Half-integer baseline Phi(delta_{a + 1/2}).
double classical_cdf(const NBParams& params, std::int64_t a);

/// Leading terms of the Poisson correction,
/// 1/2 + (lambda^-1 (a - lambda)^2 - 1) / 6.
double poisson_c_star(const PoissonParams& params, double a);

}  // namespace nbgauss

#endif  // NBGAUSS_CORRECTION_HPP
