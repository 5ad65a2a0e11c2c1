#include "nbgauss/median.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nbgauss {

namespace {

template <class Cdf>
double jittered_cdf(Cdf cdf, double t) {
    const double cell = std::floor(t);
    const double frac = t - cell;
    const auto a = static_cast<std::int64_t>(cell);
    return cdf(a) * frac + cdf(a - 1) * (1.0 - frac);
}

// a is the smallest integer with F(a) >= 1/2, so F(a - 1) < 1/2 <= F(a) and
// the solution lies in [a, a + 1].
template <class Cdf, class Pmf>
double solve_jittered_median(std::int64_t a, Cdf cdf, Pmf pmf) {
    const double below = cdf(a - 1);
    if (below == 0.5) {
        return static_cast<double>(a);
    }
    return static_cast<double>(a) + (0.5 - below) / pmf(a);
}

}  // namespace

double jittered_cdf_nb(const NBParams& params, double t) {
    return jittered_cdf([&](std::int64_t k) { return nb_cdf(params, k); }, t);
}

double jittered_cdf_poisson(const PoissonParams& params, double t) {
    return jittered_cdf([&](std::int64_t k) { return poisson_cdf(params, k); }, t);
}

double exact_jittered_median_nb(const NBParams& params) {
    return solve_jittered_median(
        nb_integer_median(params), [&](std::int64_t k) { return nb_cdf(params, k); },
        [&](std::int64_t k) { return nb_pmf(params, k); });
}

double asymptotic_jittered_median_nb(const NBParams& params) {
    const double p = params.p();
    const double q = params.q();
    return params.mean() + 0.5 - (1.0 + p) / (6.0 * q);
}

double exact_jittered_median_poisson(const PoissonParams& params) {
    return solve_jittered_median(
        poisson_integer_median(params), [&](std::int64_t k) { return poisson_cdf(params, k); },
        [&](std::int64_t k) { return poisson_pmf(params, k); });
}

double asymptotic_jittered_median_poisson(const PoissonParams& params) {
    return params.lambda() + 1.0 / 3.0;
}

MedianReport median_report_nb(const NBParams& params) {
    const double exact = exact_jittered_median_nb(params);
    const double asymptotic = asymptotic_jittered_median_nb(params);
    return {exact, asymptotic, exact - asymptotic, params};
}

MedianReport median_report_poisson(const PoissonParams& params) {
    const double exact = exact_jittered_median_poisson(params);
    const double asymptotic = asymptotic_jittered_median_poisson(params);
    return {exact, asymptotic, exact - asymptotic, params};
}

std::vector<MedianScanRow> median_scan(double p, std::span<const double> r_grid) {
    if (r_grid.empty()) {
        throw std::domain_error("median_scan: r grid is empty");
    }
    if (!std::is_sorted(r_grid.begin(), r_grid.end())) {
        throw std::domain_error("median_scan: r grid must be ascending");
    }
    std::vector<MedianScanRow> rows;
    rows.reserve(r_grid.size());
    for (double r : r_grid) {
        const NBParams params(r, p);
        const double integer_gap = static_cast<double>(nb_integer_median(params)) - params.mean();
        rows.push_back({r, integer_gap, median_report_nb(params)});
    }
    return rows;
}

}  // namespace nbgauss
