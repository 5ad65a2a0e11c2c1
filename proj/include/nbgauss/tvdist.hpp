#ifndef NBGAUSS_TVDIST_HPP
#define NBGAUSS_TVDIST_HPP

#include <cstdint>

#include "nbgauss/exactdist.hpp"
#include "nbgauss/random.hpp"

namespace nbgauss {

/// Total variation distance with its error budget.
struct TVReport {
    double tv;
    /// Rounding budget of the per-cell closed-form integrals.
    double quad_error_bound;
    /// Mass of both laws outside the window where they overlap; tv may
    /// overstate the distance by at most this much.
    double tail_mass_bound;
    std::int64_t k_lo;
    std::int64_t k_hi;
};

/// Density of K + U, U ~ Uniform(-1/2, 1/2): P(k) on [k - 1/2, k + 1/2),
/// zero below -1/2.
double jittered_density(const NBParams& params, double x);

/// TV distance between K + U (U centered) and Normal(mean, variance).
///
/// On each cell [k - 1/2, k + 1/2] the normal density is unimodal, so it
/// crosses the level P(k) at most twice, at mean +- sd sqrt(-2 ln(P(k) sd
/// sqrt(2 pi))). Between crossings the integrand has one sign, so each cell
/// integral is a sum of |P(k) length - normal mass| terms. Cells run over
/// [max(0, mean - w sd), mean + w sd] with w = window_sds; mass outside is
/// added as half of both tails.
TVReport tv_jittered_vs_normal(const NBParams& params, double window_sds = 40.0);

/// T1: k + Uniform(-1/2, 1/2).
double kernel_jitter_T1(RngStream& stream, std::int64_t k);

/// T2: nearest integer to z, ties rounded up, clamped below at 0.
std::int64_t kernel_round_T2(double z);

/// TV between NB(r, p) and the law of T2(Z), Z ~ Normal(mean, variance).
struct RoundtripReport {
    double analytic;
    /// Independent estimate: Q(A) - P(A) on the set A where the rounded
    /// normal outweighs the NB pmf, with Q(A) estimated from draws.
    double monte_carlo;
    std::int64_t draws;
};

/// Throws std::domain_error when draws < 10^4.
RoundtripReport kernel_roundtrip_tv(const NBParams& params, std::int64_t draws,
                                    RngStream& stream);

}  // namespace nbgauss

#endif  // NBGAUSS_TVDIST_HPP
