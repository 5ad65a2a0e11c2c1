#ifndef NBGAUSS_EXACTDIST_HPP
#define NBGAUSS_EXACTDIST_HPP

#include <cstdint>

namespace nbgauss {

/// Parameters (r, p) of the negative binomial law
///
///     P(k) = Gamma(r + k) / (Gamma(r) k!) q^r p^k,   k = 0, 1, 2, ...
///
/// with q = 1 - p. The mean is r p / q and the variance r p / q^2.
class NBParams {
public:
    /// Throws std::invalid_argument unless r > 0 and 0 < p < 1.
    NBParams(double r, double p);

    double r() const noexcept { return r_; }
    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }
    double mean() const noexcept { return mean_; }
    double variance() const noexcept { return sd_ * sd_; }
    double sd() const noexcept { return sd_; }

    friend bool operator==(const NBParams&, const NBParams&) = default;

private:
    double r_;
    double p_;
    double q_;
    double mean_;
    double sd_;
};

/// Poisson(lambda) parameters.
class PoissonParams {
public:
    /// Throws std::invalid_argument unless lambda > 0.
    explicit PoissonParams(double lambda);

    double lambda() const noexcept { return lambda_; }

    friend bool operator==(const PoissonParams&, const PoissonParams&) = default;

private:
    double lambda_;
};

// ---------------------------------------------------------------------------
// Negative binomial

/// ln P(k) through log-gamma. Throws std::domain_error for k < 0.
double nb_log_pmf(const NBParams& params, std::int64_t k);

/// P(k); zero for k < 0.
double nb_pmf(const NBParams& params, std::int64_t k);

/// Last index of the effective support. Every k past it is treated as
/// carrying no mass: nb_cdf returns exactly 1 there.
///
/// The index is ceil(mean + 40 sd + 40 / ln(1/p)); the second term keeps
/// the neglected tail below e^-40 relative to the last term when r p is
/// small and the law is close to geometric.
std::int64_t nb_upper_horizon(const NBParams& params);

/// P(K <= k). Zero for k < 0, one from nb_upper_horizon onward.
///
/// Terms are accumulated from k = 0 with the ratio recurrence
/// P(j+1) = P(j) p (r + j) / (j + 1); while terms are subnormal they are
/// recomputed from nb_log_pmf instead.
double nb_cdf(const NBParams& params, std::int64_t k);

/// P(K >= a). One for a <= 0. Uses 1 - nb_cdf(a - 1) while that is at most
/// 1/2, otherwise sums the upper tail directly.
double nb_survival(const NBParams& params, std::int64_t a);

/// Smallest k with P(K <= k) >= 1/2.
std::int64_t nb_integer_median(const NBParams& params);

/// Closed-form central moment E[(K - mean)^order] for order in {2, 3, 4, 6}.
///
/// Built from the cumulants kappa_n = r p A_{n-1}(p) / q^n (A_n the Eulerian
/// polynomials):
///   mu2 = r p / q^2
///   mu3 = r p (1 + p) / q^3
///   mu4 = r p [3 r p + 1 + 4p + p^2] / q^4
///   mu6 = r p [15 (r p)^2 + (25 + 80p + 25p^2) r p
///              + 1 + 26p + 66p^2 + 26p^3 + p^4] / q^6
/// Throws std::domain_error for any other order.
double nb_central_moment(const NBParams& params, int order);

/// sum_{k = k_lo}^{k_hi} (k - mean)^order P(k) by direct summation.
/// Indices below zero contribute nothing. Throws std::domain_error if
/// k_lo > k_hi or order < 0.
double nb_truncated_moment(const NBParams& params, int order, std::int64_t k_lo,
                           std::int64_t k_hi);

// ---------------------------------------------------------------------------
// Poisson

/// ln(e^-lambda lambda^k / k!). Throws std::domain_error for k < 0.
double poisson_log_pmf(const PoissonParams& params, std::int64_t k);

double poisson_pmf(const PoissonParams& params, std::int64_t k);

/// Last index of the effective support, ceil(lambda + 40 sqrt(lambda) + 40).
std::int64_t poisson_upper_horizon(const PoissonParams& params);

/// P(N <= k) by forward summation; same conventions as nb_cdf.
double poisson_cdf(const PoissonParams& params, std::int64_t k);

/// Smallest k with P(N <= k) >= 1/2.
std::int64_t poisson_integer_median(const PoissonParams& params);

}  // namespace nbgauss

#endif  // NBGAUSS_EXACTDIST_HPP
