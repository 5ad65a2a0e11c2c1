#include "nbgauss/correction.hpp"

#include <cmath>

#include "nbgauss/llt.hpp"
#include "nbgauss/specfn.hpp"

namespace nbgauss {

CorrectionPoint c_star(const NBParams& params, std::int64_t a) {
    const double p = params.p();
    const double q = params.q();
    const double d = delta_k(params, static_cast<double>(a) - 0.5);
    const double leading = 0.5 + (1.0 + p) / (6.0 * q) * (d * d - 1.0);
    const double cubic = (5.0 + 4.0 * p + 5.0 * p * p) / 72.0;
    const double linear = (1.0 - p + p * p) / 36.0;
    const double refinement = -(cubic * d * d * d - linear * d) / (q * std::sqrt(params.r() * p));
    return {a, leading + refinement, d};
}

namespace {

double corrected_point(const NBParams& params, std::int64_t a) {
    return delta_k(params, static_cast<double>(a) - c_star(params, a).c_star);
}

}  // namespace

double corrected_survival(const NBParams& params, std::int64_t a) {
    return normal_survival(corrected_point(params, a));
}

double corrected_cdf(const NBParams& params, std::int64_t a) {
    return normal_cdf(corrected_point(params, a + 1));
}

double classical_cdf(const NBParams& params, std::int64_t a) {
    return normal_cdf(delta_k(params, static_cast<double>(a) + 0.5));
}

double poisson_c_star(const PoissonParams& params, double a) {
    const double lambda = params.lambda();
    const double offset = a - lambda;
    return 0.5 + (offset * offset / lambda - 1.0) / 6.0;
}

}  // namespace nbgauss
