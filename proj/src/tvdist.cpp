#include "nbgauss/tvdist.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "detail/summation.hpp"
#include "nbgauss/specfn.hpp"

namespace nbgauss {

namespace {

// Normal(mean, sd^2) mass of [u, v], taken from whichever tail keeps the
// difference away from cancellation.
double normal_mass(double mean, double sd, double u, double v) {
    const double zu = (u - mean) / sd;
    const double zv = (v - mean) / sd;
    if (zu >= 0.0) {
        return normal_survival(zu) - normal_survival(zv);
    }
    return normal_cdf(zv) - normal_cdf(zu);
}

// Integral of |level - f| over [u, v] for the Normal(mean, sd^2) density f.
double cell_abs_difference(double level, double mean, double sd, double u, double v) {
    std::array<double, 5> cuts{};
    std::size_t count = 0;
    auto add_cut = [&](double x) {
        if (x > u && x < v) {
            cuts[count++] = x;
        }
    };
    add_cut(mean);
    if (level > 0.0) {
        const double arg = -2.0 * std::log(level * sd * std::sqrt(2.0 * std::numbers::pi));
        if (arg > 0.0) {
            const double half_width = sd * std::sqrt(arg);
            add_cut(mean - half_width);
            add_cut(mean + half_width);
        }
    }
    std::sort(cuts.begin(), cuts.begin() + static_cast<std::ptrdiff_t>(count));

    detail::CompensatedSum total;
    double left = u;
    for (std::size_t i = 0; i <= count; ++i) {
        const double right = i < count ? cuts[i] : v;
        total.add(std::fabs(level * (right - left) - normal_mass(mean, sd, left, right)));
        left = right;
    }
    return total.value();
}

struct Window {
    std::int64_t lo;
    std::int64_t hi;
};

Window make_window(const NBParams& params, double window_sds) {
    const double lo = std::floor(params.mean() - window_sds * params.sd());
    const double hi = std::ceil(params.mean() + window_sds * params.sd() +
                                window_sds / -std::log(params.p()));
    return {std::max<std::int64_t>(0, static_cast<std::int64_t>(lo)),
            static_cast<std::int64_t>(hi)};
}

// Calls fn(k, P(k)) for k = lo..hi.
template <class Fn>
void for_each_pmf(const NBParams& params, std::int64_t lo, std::int64_t hi, Fn fn) {
    const double r = params.r();
    const double p = params.p();
    double term = nb_pmf(params, lo);
    for (std::int64_t k = lo; k <= hi; ++k) {
        if (term < DBL_MIN) {
            term = nb_pmf(params, k);
        }
        fn(k, term);
        const double kd = static_cast<double>(k);
        term *= p * (r + kd) / (kd + 1.0);
    }
}

}  // namespace

double jittered_density(const NBParams& params, double x) {
    if (x < -0.5) {
        return 0.0;
    }
    const auto k = static_cast<std::int64_t>(std::floor(x + 0.5));
    return nb_pmf(params, k);
}

TVReport tv_jittered_vs_normal(const NBParams& params, double window_sds) {
    if (!(window_sds > 0.0)) {
        throw std::domain_error("tv_jittered_vs_normal: window must be positive");
    }
    const double mean = params.mean();
    const double sd = params.sd();
    const Window window = make_window(params, window_sds);

    detail::CompensatedSum body;
    for_each_pmf(params, window.lo, window.hi, [&](std::int64_t k, double pk) {
        const double x = static_cast<double>(k);
        body.add(cell_abs_difference(pk, mean, sd, x - 0.5, x + 0.5));
    });

    const double lower_edge = static_cast<double>(window.lo) - 0.5;
    const double upper_edge = static_cast<double>(window.hi) + 0.5;
    const double normal_below = normal_cdf((lower_edge - mean) / sd);
    const double normal_above = normal_survival((upper_edge - mean) / sd);
    const double nb_below = nb_cdf(params, window.lo - 1);
    const double nb_above = nb_survival(params, window.hi + 1);

    // Below -1/2 the jittered density vanishes, so that normal mass counts
    // exactly; elsewhere outside the window both laws carry mass.
    double tail_bound = nb_below + nb_above + normal_above;
    if (window.lo > 0) {
        tail_bound += normal_below;
    }

    const double tv = 0.5 * (body.value() + normal_below + normal_above + nb_below + nb_above);
    const auto cells = static_cast<double>(window.hi - window.lo + 1);
    return {std::clamp(tv, 0.0, 1.0), 16.0 * DBL_EPSILON * cells, tail_bound, window.lo,
            window.hi};
}

double kernel_jitter_T1(RngStream& stream, std::int64_t k) {
    return static_cast<double>(k) + (stream.uniform() - 0.5);
}

std::int64_t kernel_round_T2(double z) {
    const double rounded = std::floor(z + 0.5);
    return rounded <= 0.0 ? 0 : static_cast<std::int64_t>(rounded);
}

RoundtripReport kernel_roundtrip_tv(const NBParams& params, std::int64_t draws,
                                    RngStream& stream) {
    if (draws < 10000) {
        throw std::domain_error("kernel_roundtrip_tv: need at least 10^4 draws");
    }
    const double mean = params.mean();
    const double sd = params.sd();
    const std::int64_t hi = make_window(params, 40.0).hi;

    // The rounded normal puts Phi((1/2 - mean)/sd) on 0 and the cell mass
    // of [k - 1/2, k + 1/2] on every k >= 1.
    std::vector<char> heavier(static_cast<std::size_t>(hi + 1), 0);
    detail::CompensatedSum body, nb_on_set;
    for_each_pmf(params, 0, hi, [&](std::int64_t k, double pk) {
        const double x = static_cast<double>(k);
        const double qk = k == 0 ? normal_cdf((0.5 - mean) / sd)
                                 : normal_mass(mean, sd, x - 0.5, x + 0.5);
        body.add(std::fabs(pk - qk));
        if (qk > pk) {
            heavier[static_cast<std::size_t>(k)] = 1;
            nb_on_set.add(pk);
        }
    });
    const double tails = nb_survival(params, hi + 1) +
                         normal_survival((static_cast<double>(hi) + 0.5 - mean) / sd);
    const double analytic = std::clamp(0.5 * (body.value() + tails), 0.0, 1.0);

    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < draws; ++i) {
        const std::int64_t k = kernel_round_T2(mean + sd * stream.normal());
        if (k <= hi && heavier[static_cast<std::size_t>(k)]) {
            ++hits;
        }
    }
    const double monte_carlo =
        static_cast<double>(hits) / static_cast<double>(draws) - nb_on_set.value();
    return {analytic, monte_carlo, draws};
}

}  // namespace nbgauss
