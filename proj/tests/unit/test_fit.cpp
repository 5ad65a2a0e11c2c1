#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nbgauss/fit.hpp"

using nbgauss::log_log_slope;

TEST_CASE("exact power laws") {
    const std::vector<double> x{16, 64, 256, 1024};
    std::vector<double> y;
    for (double v : x) {
        y.push_back(3.0 * std::pow(v, -0.5));
    }
    CHECK(log_log_slope(x, y) == doctest::Approx(-0.5).epsilon(1e-13));
    const std::vector<double> two_x{2, 8};
    const std::vector<double> two_y{5, 5};
    CHECK(log_log_slope(two_x, two_y) == doctest::Approx(0.0));
}

TEST_CASE("least squares in log space") {
    // log y = {0, 1, 0} at log x = {0, 1, 2}: slope 0
    const std::vector<double> x{1, std::exp(1.0), std::exp(2.0)};
    const std::vector<double> y{1, std::exp(1.0), 1};
    CHECK(log_log_slope(x, y) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("invalid input") {
    const std::vector<double> one{1.0};
    const std::vector<double> x{1, 2};
    const std::vector<double> neg{1, -2};
    const std::vector<double> same{3, 3};
    const std::vector<double> three{1, 2, 3};
    CHECK_THROWS_AS(log_log_slope(one, one), std::domain_error);
    CHECK_THROWS_AS(log_log_slope(x, neg), std::domain_error);
    CHECK_THROWS_AS(log_log_slope(same, x), std::domain_error);
    CHECK_THROWS_AS(log_log_slope(x, three), std::domain_error);
}
