#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nbgauss/median.hpp"

using namespace nbgauss;

TEST_CASE("nb jittered median, r = 1, p = 1/2") {
    const NBParams params(1, 0.5);
    CHECK(exact_jittered_median_nb(params) == 1.0);
    CHECK(asymptotic_jittered_median_nb(params) == 1.0);
    const MedianReport report = median_report_nb(params);
    CHECK(report.residual == 0.0);
    CHECK(std::holds_alternative<NBParams>(report.params));
}

TEST_CASE("exact median solves the defining equation") {
    for (double r : {0.3, 1.0, 7.7, 120.0, 2500.0}) {
        for (double p : {0.05, 0.25, 0.5, 0.75, 0.95}) {
            const NBParams params(r, p);
            const double t = exact_jittered_median_nb(params);
            CHECK(t >= 0.0);
            CHECK(jittered_cdf_nb(params, t) == doctest::Approx(0.5).epsilon(1e-12));
            const MedianReport report = median_report_nb(params);
            CHECK(report.residual == report.exact - report.asymptotic);
        }
    }
}

TEST_CASE("jittered cdf shape") {
    const NBParams params(3, 0.4);
    CHECK(jittered_cdf_nb(params, -0.1) == 0.0);
    CHECK(jittered_cdf_nb(params, 0.0) == 0.0);
    CHECK(jittered_cdf_nb(params, 1.0) == doctest::Approx(nb_cdf(params, 0)).epsilon(1e-15));
    CHECK(jittered_cdf_nb(params, 2.5) ==
          doctest::Approx(0.5 * (nb_cdf(params, 1) + nb_cdf(params, 2))).epsilon(1e-15));
}

TEST_CASE("asymptotic nb median") {
    CHECK(asymptotic_jittered_median_nb(NBParams(37, 0.5)) == doctest::Approx(37.0).epsilon(1e-15));
    CHECK(asymptotic_jittered_median_nb(NBParams(12, 0.25)) ==
          doctest::Approx(4.2222222222222222).epsilon(1e-14));
    CHECK(asymptotic_jittered_median_nb(NBParams(4, 0.75)) ==
          doctest::Approx(11.333333333333333).epsilon(1e-14));
}

TEST_CASE("poisson jittered median") {
    const PoissonParams ln2(std::log(2.0));
    CHECK(exact_jittered_median_poisson(ln2) == doctest::Approx(1.0).epsilon(1e-15));
    for (double lambda : {0.1, 3.0, 100.0, 4321.5}) {
        const PoissonParams params(lambda);
        const double t = exact_jittered_median_poisson(params);
        CHECK(jittered_cdf_poisson(params, t) == doctest::Approx(0.5).epsilon(1e-12));
    }
    const PoissonParams hundred(100.0);
    CHECK(std::fabs(median_report_poisson(hundred).residual) <= 0.1);
    CHECK(asymptotic_jittered_median_poisson(PoissonParams(3.0)) == doctest::Approx(10.0 / 3.0));
    CHECK(asymptotic_jittered_median_poisson(PoissonParams(0.1)) ==
          doctest::Approx(0.43333333333333335));
    CHECK(asymptotic_jittered_median_poisson(PoissonParams(1000.0)) ==
          doctest::Approx(1000.0 + 1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("median_scan") {
    const std::vector<double> one{1.0};
    const auto single = median_scan(0.5, one);
    REQUIRE(single.size() == 1);
    CHECK(single[0].report.residual == 0.0);

    std::vector<double> grid;
    for (int r = 1; r <= 300; ++r) {
        grid.push_back(r);
    }
    for (double p : {0.25, 0.75}) {
        const auto rows = median_scan(p, grid);
        CHECK(rows.size() == grid.size());
        double early = 0.0;
        double late = 0.0;
        for (const auto& row : rows) {
            if (row.r >= 5 && row.r <= 15) {
                early = std::max(early, std::fabs(row.report.residual));
            }
            if (row.r >= 200) {
                late = std::max(late, std::fabs(row.report.residual));
            }
        }
        CHECK(late < early);
    }
    const std::vector<double> empty;
    CHECK_THROWS_AS(median_scan(0.5, empty), std::domain_error);
    const std::vector<double> descending{3.0, 2.0};
    CHECK_THROWS_AS(median_scan(0.5, descending), std::domain_error);
}
