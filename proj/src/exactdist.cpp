#include "nbgauss/exactdist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "detail/forward_pmf.hpp"
#include "detail/summation.hpp"
#include "nbgauss/specfn.hpp"

namespace nbgauss {

NBParams::NBParams(double r, double p) : r_(r), p_(p), q_(1.0 - p) {
    if (!(std::isfinite(r) && r > 0.0)) {
        throw std::invalid_argument("NBParams: r must be finite and positive, got " +
                                    std::to_string(r));
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("NBParams: p must lie in (0, 1), got " + std::to_string(p));
    }
    mean_ = r_ * p_ / q_;
    sd_ = std::sqrt(r_ * p_) / q_;
}

PoissonParams::PoissonParams(double lambda) : lambda_(lambda) {
    if (!(std::isfinite(lambda) && lambda > 0.0)) {
        throw std::invalid_argument("PoissonParams: lambda must be finite and positive, got " +
                                    std::to_string(lambda));
    }
}

namespace {

void require_nonnegative(std::int64_t k, const char* what) {
    if (k < 0) {
        throw std::domain_error(std::string(what) + ": k must be non-negative, got " +
                                std::to_string(k));
    }
}

auto nb_walker(const NBParams& params) {
    auto log_pmf = [&params](std::int64_t k) { return nb_log_pmf(params, k); };
    auto ratio = [p = params.p(), r = params.r()](std::int64_t j) {
        const double jd = static_cast<double>(j);
        return p * (r + jd) / (jd + 1.0);
    };
    return detail::ForwardPmf(log_pmf, ratio);
}

auto poisson_walker(const PoissonParams& params) {
    auto log_pmf = [&params](std::int64_t k) { return poisson_log_pmf(params, k); };
    auto ratio = [lambda = params.lambda()](std::int64_t j) {
        return lambda / (static_cast<double>(j) + 1.0);
    };
    return detail::ForwardPmf(log_pmf, ratio);
}

template <class Walker>
double cumulative_to(Walker walker, std::int64_t k) {
    while (walker.index() < k) {
        walker.advance();
    }
    return std::min(1.0, walker.cumulative());
}

template <class Walker>
std::int64_t first_reaching_half(Walker walker) {
    while (walker.cumulative() < 0.5) {
        walker.advance();
    }
    return walker.index();
}

}  // namespace

// ---------------------------------------------------------------------------

double nb_log_pmf(const NBParams& params, std::int64_t k) {
    require_nonnegative(k, "nb_log_pmf");
    const double r = params.r();
    const double kd = static_cast<double>(k);
    if (k == 0) {
        return r * std::log1p(-params.p());
    }
    // Saddle-point form (Loader 2000): the lgamma differences cancel to
    // about ulp(lgamma(r + k)) otherwise, which costs 1e-11 at r ~ 1e3.
    const double n = r + kd;
    const double log_binom = stirling_error(n) - stirling_error(r) - stirling_error(kd) -
                             deviance_term(r, n * params.q()) -
                             deviance_term(kd, n * params.p()) -
                             0.5 * (std::log(2.0 * std::numbers::pi) + std::log(r) +
                                    std::log1p(-r / n));
    return std::log(r / n) + log_binom;
}

double nb_pmf(const NBParams& params, std::int64_t k) {
    return k < 0 ? 0.0 : std::exp(nb_log_pmf(params, k));
}

std::int64_t nb_upper_horizon(const NBParams& params) {
    const double extra = 40.0 / -std::log(params.p());
    return static_cast<std::int64_t>(std::ceil(params.mean() + 40.0 * params.sd() + extra));
}

double nb_cdf(const NBParams& params, std::int64_t k) {
    if (k < 0) {
        return 0.0;
    }
    if (k >= nb_upper_horizon(params)) {
        return 1.0;
    }
    return cumulative_to(nb_walker(params), k);
}

double nb_survival(const NBParams& params, std::int64_t a) {
    if (a <= 0) {
        return 1.0;
    }
    const double below = nb_cdf(params, a - 1);
    if (below <= 0.5) {
        return 1.0 - below;
    }
    // Direct upper-tail sum. Past the mode the terms decrease, so stopping
    // once a term is negligible against the running total is safe.
    const double r = params.r();
    const double p = params.p();
    const double mode = std::max(0.0, (r - 1.0) * p / params.q());
    double term = nb_pmf(params, a);
    detail::CompensatedSum tail;
    for (std::int64_t j = a;; ++j) {
        tail.add(term);
        const double acc = tail.value();
        if (static_cast<double>(j) > mode && (term <= 1e-17 * acc || acc == 0.0)) {
            break;
        }
        const double jd = static_cast<double>(j);
        term *= p * (r + jd) / (jd + 1.0);
    }
    return std::min(1.0, tail.value());
}

std::int64_t nb_integer_median(const NBParams& params) {
    return first_reaching_half(nb_walker(params));
}

double nb_central_moment(const NBParams& params, int order) {
    const double p = params.p();
    const double q = params.q();
    const double rp = params.r() * p;
    switch (order) {
        case 2:
            return rp / (q * q);
        case 3:
            return rp * (1.0 + p) / (q * q * q);
        case 4: {
            const double q4 = std::pow(q, 4);
            return rp * (3.0 * rp + 1.0 + 4.0 * p + p * p) / q4;
        }
        case 6: {
            const double q6 = std::pow(q, 6);
            const double p2 = p * p;
            const double a1 = 25.0 + 80.0 * p + 25.0 * p2;
            const double a0 = 1.0 + 26.0 * p + 66.0 * p2 + 26.0 * p2 * p + p2 * p2;
            return rp * (15.0 * rp * rp + a1 * rp + a0) / q6;
        }
        default:
            throw std::domain_error("nb_central_moment: order must be 2, 3, 4 or 6, got " +
                                    std::to_string(order));
    }
}

double nb_truncated_moment(const NBParams& params, int order, std::int64_t k_lo,
                           std::int64_t k_hi) {
    if (k_lo > k_hi) {
        throw std::domain_error("nb_truncated_moment: empty index range");
    }
    if (order < 0) {
        throw std::domain_error("nb_truncated_moment: order must be non-negative");
    }
    k_lo = std::max<std::int64_t>(k_lo, 0);
    if (k_hi < k_lo) {
        return 0.0;
    }
    const double mean = params.mean();
    const double r = params.r();
    const double p = params.p();
    detail::CompensatedSum sum;
    double term = nb_pmf(params, k_lo);
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        if (term < 1e-300) {
            term = nb_pmf(params, k);
        }
        sum.add(std::pow(static_cast<double>(k) - mean, order) * term);
        const double kd = static_cast<double>(k);
        term *= p * (r + kd) / (kd + 1.0);
    }
    return sum.value();
}

// ---------------------------------------------------------------------------

double poisson_log_pmf(const PoissonParams& params, std::int64_t k) {
    require_nonnegative(k, "poisson_log_pmf");
    const double lambda = params.lambda();
    if (k == 0) {
        return -lambda;
    }
    const double kd = static_cast<double>(k);
    return -stirling_error(kd) - deviance_term(kd, lambda) -
           0.5 * std::log(2.0 * std::numbers::pi * kd);
}

double poisson_pmf(const PoissonParams& params, std::int64_t k) {
    return k < 0 ? 0.0 : std::exp(poisson_log_pmf(params, k));
}

std::int64_t poisson_upper_horizon(const PoissonParams& params) {
    const double lambda = params.lambda();
    return static_cast<std::int64_t>(std::ceil(lambda + 40.0 * std::sqrt(lambda) + 40.0));
}

double poisson_cdf(const PoissonParams& params, std::int64_t k) {
    if (k < 0) {
        return 0.0;
    }
    if (k >= poisson_upper_horizon(params)) {
        return 1.0;
    }
    return cumulative_to(poisson_walker(params), k);
}

std::int64_t poisson_integer_median(const PoissonParams& params) {
    return first_reaching_half(poisson_walker(params));
}

}  // namespace nbgauss
