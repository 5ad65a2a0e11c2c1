#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/negative_binomial.hpp>
#include <boost/math/distributions/poisson.hpp>

#include "nbgauss/exactdist.hpp"

using namespace nbgauss;

namespace {

// sum_{k <= hi} (k - mean)^order P(k), long double, by recurrence from q^r
long double brute_moment(const NBParams& params, int order, std::int64_t hi) {
    long double term = std::pow(static_cast<long double>(params.q()), params.r());
    long double total = 0.0L;
    for (std::int64_t k = 0; k <= hi; ++k) {
        total += std::pow(static_cast<long double>(k) - params.mean(), order) * term;
        term *= params.p() * (params.r() + k) / (k + 1);
    }
    return total;
}

}  // namespace

TEST_CASE("params validation") {
    CHECK_THROWS_AS(NBParams(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(NBParams(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(NBParams(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(NBParams(NAN, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(PoissonParams(0.0), std::invalid_argument);
    const NBParams params(3.0, 0.25);
    CHECK(params.mean() == doctest::Approx(1.0));
    CHECK(params.variance() == doctest::Approx(3.0 * 0.25 / (0.75 * 0.75)));
}

TEST_CASE("nb_log_pmf hand values") {
    CHECK(nb_log_pmf(NBParams(2, 0.5), 0) == doctest::Approx(std::log(0.25)).epsilon(1e-15));
    CHECK(nb_log_pmf(NBParams(2, 0.5), 3) == doctest::Approx(std::log(0.125)).epsilon(1e-15));
    CHECK(nb_log_pmf(NBParams(1, 0.3), 2) == doctest::Approx(std::log(0.7 * 0.09)).epsilon(1e-15));
    CHECK_THROWS_AS(nb_log_pmf(NBParams(1, 0.3), -1), std::domain_error);
    CHECK(nb_pmf(NBParams(1, 0.3), -1) == 0.0);
}

TEST_CASE("nb_pmf against boost") {
    double worst = 0.0;
    for (double r : {0.05, 0.7, 3.0, 41.5, 900.0, 2e5}) {
        for (double p : {0.02, 0.3, 0.5, 0.9, 0.995}) {
            const NBParams params(r, p);
            const boost::math::negative_binomial oracle(r, params.q());
            const double lo = std::max(0.0, std::floor(params.mean() - 6 * params.sd()));
            const double hi = std::ceil(params.mean() + 6 * params.sd());
            const double step = std::max(1.0, std::floor((hi - lo) / 200));
            for (double k = lo; k <= hi; k += step) {
                const double want = boost::math::pdf(oracle, k);
                if (want < 1e-300) {
                    continue;
                }
                const double got = nb_pmf(params, static_cast<std::int64_t>(k));
                worst = std::max(worst, std::fabs(got - want) / want);
            }
        }
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("nb_cdf and nb_survival") {
    CHECK(nb_cdf(NBParams(1, 0.5), 2) == doctest::Approx(0.875).epsilon(1e-15));
    CHECK(nb_cdf(NBParams(2, 0.5), -1) == 0.0);
    CHECK(nb_cdf(NBParams(5, 0.25), 1) == doctest::Approx(0.533935546875).epsilon(1e-14));
    for (double r : {0.4, 12.0, 700.0}) {
        for (double p : {0.1, 0.5, 0.8}) {
            const NBParams params(r, p);
            const boost::math::negative_binomial oracle(r, params.q());
            const auto hi = static_cast<std::int64_t>(params.mean() + 10 * params.sd());
            for (std::int64_t k = 0; k <= hi; k += std::max<std::int64_t>(1, hi / 50)) {
                const double kd = static_cast<double>(k);
                CHECK(nb_cdf(params, k) ==
                      doctest::Approx(boost::math::cdf(oracle, kd)).epsilon(1e-12));
                const double tail =
                    k == 0 ? 1.0 : boost::math::cdf(boost::math::complement(oracle, kd - 1));
                CHECK(nb_survival(params, k) == doctest::Approx(tail).epsilon(1e-11));
            }
        }
    }
    // far upper tail keeps relative accuracy
    const NBParams params(10, 0.5);
    const boost::math::negative_binomial oracle(10, 0.5);
    CHECK(nb_survival(params, 150) ==
          doctest::Approx(boost::math::cdf(boost::math::complement(oracle, 149.0))).epsilon(1e-10));
    CHECK(nb_survival(params, 0) == 1.0);
}

TEST_CASE("nb_integer_median") {
    CHECK(nb_integer_median(NBParams(1, 0.5)) == 0);
    CHECK(nb_integer_median(NBParams(2, 0.5)) == 1);
    for (double r : {10.0, 0.3, 57.0}) {
        for (double p : {0.2, 0.5, 0.85}) {
            const NBParams params(r, p);
            std::int64_t k = 0;
            while (nb_cdf(params, k) < 0.5) {
                ++k;
            }
            CHECK(nb_integer_median(params) == k);
        }
    }
}

TEST_CASE("nb_central_moment") {
    const NBParams three(3, 0.5);
    CHECK(nb_central_moment(three, 2) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(nb_central_moment(three, 3) == doctest::Approx(18.0).epsilon(1e-15));
    const auto hi = static_cast<std::int64_t>(three.mean() + 40 * three.sd()) + 60;
    CHECK(nb_central_moment(three, 4) ==
          doctest::Approx(static_cast<double>(brute_moment(three, 4, hi))).epsilon(1e-12));
    CHECK_THROWS_AS(nb_central_moment(three, 5), std::domain_error);

    // orders 4 and 6 are polynomials in r of degree 2 and 3: an exact fit
    // through brute-force sums at a few r must reproduce the closed form at
    // a fresh r
    for (double p : {0.2, 0.6}) {
        for (int order : {4, 6}) {
            const int degree = order / 2;
            std::vector<double> rs, ys;
            for (int i = 1; i <= degree + 1; ++i) {
                const NBParams params(i * 1.5, p);
                const auto top = static_cast<std::int64_t>(params.mean() + 60 * params.sd()) + 300;
                rs.push_back(params.r());
                ys.push_back(static_cast<double>(brute_moment(params, order, top)));
            }
            const double r_new = 7.25;
            double interp = 0.0;  // Lagrange form
            for (std::size_t i = 0; i < rs.size(); ++i) {
                double w = ys[i];
                for (std::size_t j = 0; j < rs.size(); ++j) {
                    if (j != i) {
                        w *= (r_new - rs[j]) / (rs[i] - rs[j]);
                    }
                }
                interp += w;
            }
            CHECK(nb_central_moment(NBParams(r_new, p), order) ==
                  doctest::Approx(interp).epsilon(1e-9));
        }
    }
}

TEST_CASE("nb_truncated_moment") {
    const NBParams params(4, 0.5);
    const auto hi = static_cast<std::int64_t>(std::ceil(params.mean() + 40 * params.sd()));
    CHECK(nb_truncated_moment(params, 2, 0, hi) ==
          doctest::Approx(nb_central_moment(params, 2)).epsilon(1e-10));
    CHECK(std::fabs(nb_truncated_moment(params, 1, hi + 1, hi + 500)) < 1e-10);
    CHECK(std::fabs(nb_truncated_moment(params, 1, 0, hi)) < 1e-12);
}

TEST_CASE("poisson") {
    CHECK(poisson_log_pmf(PoissonParams(1.0), 0) == -1.0);
    CHECK(poisson_integer_median(PoissonParams(std::log(2.0))) == 0);
    CHECK(poisson_integer_median(PoissonParams(10.0)) == 10);
    for (double lambda : {0.2, 3.5, 88.0, 1e4}) {
        const PoissonParams params(lambda);
        const boost::math::poisson oracle(lambda);
        const auto hi = static_cast<std::int64_t>(lambda + 8 * std::sqrt(lambda) + 8);
        for (std::int64_t k = 0; k <= hi; k += std::max<std::int64_t>(1, hi / 40)) {
            const double kd = static_cast<double>(k);
            CHECK(poisson_pmf(params, k) ==
                  doctest::Approx(boost::math::pdf(oracle, kd)).epsilon(1e-12));
            CHECK(poisson_cdf(params, k) ==
                  doctest::Approx(boost::math::cdf(oracle, kd)).epsilon(1e-12));
        }
    }
}
