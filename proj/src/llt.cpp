#include "nbgauss/llt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nbgauss {

BulkSpec::BulkSpec(double eta) : eta_(eta) {
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::invalid_argument("BulkSpec: eta must lie in (0, 1), got " +
                                    std::to_string(eta));
    }
}

double delta_k(const NBParams& params, double k) {
    return (k - params.mean()) / params.sd();
}

namespace {

// Largest |delta| admitted by the bulk.
double bulk_delta_limit(const NBParams& params, const BulkSpec& spec) {
    return spec.eta() * std::cbrt(1.0 / params.r()) * std::sqrt(params.r() * params.p());
}

// Coefficient polynomials of the two expansions, in powers of delta.
double half_order_poly(double p, double d) {
    return (1.0 + p) * d * d * d / 6.0 - (1.0 + p) * d / 2.0;
}

double log_first_order_poly(double p, double q, double d) {
    const double d2 = d * d;
    return -(1.0 + p + p * p) * d2 * d2 / 12.0 + (p * p + 1.0) * d2 / 4.0 - (p * p + q) / 12.0;
}

double ratio_first_order_poly(double p, double q, double d) {
    const double d2 = d * d;
    const double d4 = d2 * d2;
    return (1.0 + p) * (1.0 + p) * d4 * d2 / 72.0 - (2.0 + 3.0 * p + 2.0 * p * p) * d4 / 12.0 +
           (3.0 + 2.0 * p + 3.0 * p * p) * d2 / 8.0 - (p * p + q) / 12.0;
}

double remainder(const NBParams& params, const BulkSpec& spec, double d, int power) {
    return (1.0 + std::pow(std::fabs(d), power)) /
           (std::pow(params.r(), 1.5) * std::pow(spec.eta(), 4));
}

const BulkSpec kDefaultBulk{0.5};

}  // namespace

bool in_bulk(const NBParams& params, const BulkSpec& spec, double k) {
    const double d = delta_k(params, k) / std::sqrt(params.r() * params.p());
    return std::fabs(d) <= spec.eta() * std::cbrt(1.0 / params.r());
}

IndexRange bulk_range(const NBParams& params, const BulkSpec& spec) {
    const double half_width = bulk_delta_limit(params, spec) * params.sd();
    auto lo = static_cast<std::int64_t>(std::ceil(params.mean() - half_width));
    auto hi = static_cast<std::int64_t>(std::floor(params.mean() + half_width));
    lo = std::max<std::int64_t>(lo, 0);
    // settle rounding at the edges against the membership test itself
    while (lo > 0 && in_bulk(params, spec, static_cast<double>(lo - 1))) {
        --lo;
    }
    while (lo <= hi && !in_bulk(params, spec, static_cast<double>(lo))) {
        ++lo;
    }
    while (in_bulk(params, spec, static_cast<double>(hi + 1))) {
        ++hi;
    }
    while (hi >= lo && !in_bulk(params, spec, static_cast<double>(hi))) {
        --hi;
    }
    return {lo, hi};
}

ExpansionResult llt_log_ratio(const NBParams& params, std::int64_t k, const BulkSpec& spec) {
    const double p = params.p();
    const double rp = params.r() * p;
    const double d = delta_k(params, static_cast<double>(k));
    const double half = half_order_poly(p, d) / std::sqrt(rp);
    const double one = log_first_order_poly(p, params.q(), d) / rp;
    return {half + one, half, one, remainder(params, spec, d, 5)};
}

ExpansionResult llt_log_ratio(const NBParams& params, std::int64_t k) {
    return llt_log_ratio(params, k, kDefaultBulk);
}

ExpansionResult llt_ratio(const NBParams& params, std::int64_t k, const BulkSpec& spec) {
    const double p = params.p();
    const double rp = params.r() * p;
    const double d = delta_k(params, static_cast<double>(k));
    const double half = half_order_poly(p, d) / std::sqrt(rp);
    const double one = ratio_first_order_poly(p, params.q(), d) / rp;
    return {1.0 + half + one, half, one, remainder(params, spec, d, 9)};
}

ExpansionResult llt_ratio(const NBParams& params, std::int64_t k) {
    return llt_ratio(params, k, kDefaultBulk);
}

double exact_pmf_ratio(const NBParams& params, std::int64_t k) {
    const double d = delta_k(params, static_cast<double>(k));
    // ln( q phi(d) / sqrt(r p) ) = ln(1/sd) - d^2/2 - ln sqrt(2 pi)
    const double log_gauss = -std::log(params.sd()) - 0.5 * d * d -
                             0.5 * std::log(2.0 * std::numbers::pi);
    return std::exp(nb_log_pmf(params, k) - log_gauss);
}

}  // namespace nbgauss
