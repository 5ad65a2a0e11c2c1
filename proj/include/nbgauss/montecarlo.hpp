#ifndef NBGAUSS_MONTECARLO_HPP
#define NBGAUSS_MONTECARLO_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "nbgauss/exactdist.hpp"
#include "nbgauss/random.hpp"

namespace nbgauss {

// ---------------------------------------------------------------------------
// Variate generation

/// Gamma(shape, scale) by the Marsaglia-Tsang squeeze method. For shape < 1
/// a Gamma(shape + 1) draw is scaled by U^(1/shape); that factor underflows
/// to zero for extremely small shapes.
///
/// Throws std::domain_error unless shape > 0 and scale > 0.
double sample_gamma(RngStream& stream, double shape, double scale);

/// Poisson(lambda). Sequential-search inversion for lambda <= 10, Hormann's
/// transformed rejection with squeeze (PTRS) above.
///
/// Throws std::domain_error unless lambda > 0.
std::int64_t sample_poisson(RngStream& stream, double lambda);

/// NB(r, p) as a Poisson(Lambda) draw with Lambda ~ Gamma(r, p/q).
std::int64_t sample_nb(RngStream& stream, const NBParams& params);

/// k + U with U ~ Uniform(0, 1), or Uniform(-1/2, 1/2) when centered.
double jitter(RngStream& stream, std::int64_t k, bool centered);

// ---------------------------------------------------------------------------
// Estimators of p for known r

/// Thrown when a data set admits no estimate (zero or negative denominator).
class DegenerateSample : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Estimate {
    double value;
    bool in_range;  ///< value lies in the open interval (0, 1)
};

/// Lower-middle order statistic (element (n - 1) / 2 of the sorted data).
/// Throws std::domain_error for empty input.
double sample_median(std::span<const double> xs);

/// Median-based estimate (m - 1/3) / (m - 2/3 + r) from jittered data,
/// where m is sample_median(xs). The value is returned as computed; check
/// in_range before treating it as a probability.
///
/// Throws std::domain_error for empty input and DegenerateSample when the
/// denominator is not positive.
Estimate robust_estimate_p(std::span<const double> xs, double r);

/// Moment/ML estimate 1 / (1 + r n / sum) with n = xs.size().
Estimate ml_estimate_p(std::span<const double> xs, double r);

/// Same estimate from a precomputed sum. Throws DegenerateSample when
/// sum <= 0 and std::domain_error when n == 0.
Estimate ml_estimate_p_from_sum(double sum, std::size_t n, double r);

// ---------------------------------------------------------------------------
// Bias / RMSE experiment

/// Which observations feed the ML estimator.
enum class MlInput {
    jittered,  ///< X_i = K_i + U_i
    raw,       ///< K_i
};

struct SimConfig {
    std::int64_t n = 200;
    std::int64_t reps = 2000;
    double p = 0.5;
    std::vector<double> r_grid;
    std::uint64_t seed = 1;
    MlInput ml_input = MlInput::jittered;
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;

    /// Throws std::invalid_argument unless n >= 2, reps >= 1, 0 < p < 1 and
    /// the grid is non-empty, positive and ascending.
    void validate() const;
};

struct SimRow {
    double r;
    double bias_robust;
    double bias_ml;
    double rmse_robust;
    double rmse_ml;
    double rmse_ratio;  ///< rmse_robust / rmse_ml; NaN when rmse_ml == 0
    std::int64_t degenerate_count;
};

struct SimReport {
    SimConfig config;
    std::vector<SimRow> rows;
};

/// For each r: reps data sets of n jittered NB(r, p) draws, both estimators
/// on each. Replication (i, j) draws from RngStream(seed, i << 32 | j), so
/// the report depends only on the config, not on thread scheduling.
///
/// Data sets on which either estimator is degenerate are counted in
/// degenerate_count and left out of both estimators' statistics.
SimReport run_bias_rmse_experiment(const SimConfig& cfg);

}  // namespace nbgauss

#endif  // NBGAUSS_MONTECARLO_HPP
