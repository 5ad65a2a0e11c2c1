#include "nbgauss/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "detail/summation.hpp"
#include "nbgauss/specfn.hpp"

namespace nbgauss {

namespace {

// Marsaglia & Tsang (2000), shape >= 1.
double gamma_large(RngStream& stream, double shape) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x, v;
        do {
            x = stream.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

std::int64_t poisson_inversion(RngStream& stream, double lambda) {
    const double u = stream.uniform();
    double term = std::exp(-lambda);
    double cumulative = term;
    std::int64_t k = 0;
    // cumulative can stall just below u through rounding; the term then
    // underflows and the search ends there
    while (u > cumulative && term > 0.0) {
        ++k;
        term *= lambda / static_cast<double>(k);
        cumulative += term;
    }
    return k;
}

// Hormann (1993), "The transformed rejection method for generating Poisson
// random variables", algorithm PTRS.
std::int64_t poisson_ptrs(RngStream& stream, double lambda) {
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    while (true) {
        const double u = stream.uniform() - 0.5;
        const double v = stream.uniform();
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<std::int64_t>(kf);
        }
        if (kf < 0.0 || (us < 0.013 && v > us)) {
            continue;
        }
        const double lhs = std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b);
        const double rhs = -lambda + kf * loglam - log_gamma(kf + 1.0);
        if (lhs <= rhs) {
            return static_cast<std::int64_t>(kf);
        }
    }
}

}  // namespace

double sample_gamma(RngStream& stream, double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0)) {
        throw std::domain_error("sample_gamma: shape and scale must be positive");
    }
    if (shape < 1.0) {
        const double boost = std::pow(stream.uniform(), 1.0 / shape);
        return gamma_large(stream, shape + 1.0) * boost * scale;
    }
    return gamma_large(stream, shape) * scale;
}

std::int64_t sample_poisson(RngStream& stream, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::domain_error("sample_poisson: lambda must be finite and positive");
    }
    return lambda <= 10.0 ? poisson_inversion(stream, lambda) : poisson_ptrs(stream, lambda);
}

std::int64_t sample_nb(RngStream& stream, const NBParams& params) {
    const double rate = sample_gamma(stream, params.r(), params.p() / params.q());
    if (rate <= 0.0) {
        return 0;
    }
    return sample_poisson(stream, rate);
}

double jitter(RngStream& stream, std::int64_t k, bool centered) {
    const double u = stream.uniform();
    return static_cast<double>(k) + (centered ? u - 0.5 : u);
}

// ---------------------------------------------------------------------------

double sample_median(std::span<const double> xs) {
    if (xs.empty()) {
        throw std::domain_error("sample_median: empty sample");
    }
    std::vector<double> work(xs.begin(), xs.end());
    const auto middle = work.begin() + static_cast<std::ptrdiff_t>((work.size() - 1) / 2);
    std::nth_element(work.begin(), middle, work.end());
    return *middle;
}

namespace {

Estimate make_estimate(double value) {
    return {value, value > 0.0 && value < 1.0};
}

}  // namespace

Estimate robust_estimate_p(std::span<const double> xs, double r) {
    const double m = sample_median(xs);
    const double denominator = m - 2.0 / 3.0 + r;
    if (!(denominator > 0.0)) {
        throw DegenerateSample("robust_estimate_p: non-positive denominator m - 2/3 + r = " +
                               std::to_string(denominator));
    }
    return make_estimate((m - 1.0 / 3.0) / denominator);
}

Estimate ml_estimate_p_from_sum(double sum, std::size_t n, double r) {
    if (n == 0) {
        throw std::domain_error("ml_estimate_p: empty sample");
    }
    if (!(sum > 0.0)) {
        throw DegenerateSample("ml_estimate_p: sample sum must be positive");
    }
    return make_estimate(1.0 / (1.0 + r * static_cast<double>(n) / sum));
}

Estimate ml_estimate_p(std::span<const double> xs, double r) {
    detail::CompensatedSum sum;
    for (double x : xs) {
        sum.add(x);
    }
    return ml_estimate_p_from_sum(sum.value(), xs.size(), r);
}

// ---------------------------------------------------------------------------

void SimConfig::validate() const {
    if (n < 2) {
        throw std::invalid_argument("SimConfig: n must be at least 2");
    }
    if (reps < 1) {
        throw std::invalid_argument("SimConfig: reps must be at least 1");
    }
    if (reps > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("SimConfig: reps must fit in 32 bits");
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("SimConfig: p must lie in (0, 1)");
    }
    if (r_grid.empty()) {
        throw std::invalid_argument("SimConfig: r grid is empty");
    }
    if (!std::is_sorted(r_grid.begin(), r_grid.end()) || !(r_grid.front() > 0.0)) {
        throw std::invalid_argument("SimConfig: r grid must be positive and ascending");
    }
}

namespace {

struct RepOutcome {
    double robust = std::numeric_limits<double>::quiet_NaN();
    double ml = std::numeric_limits<double>::quiet_NaN();
    bool degenerate = false;
};

RepOutcome run_replication(const SimConfig& cfg, std::size_t r_index, std::int64_t rep) {
    const NBParams params(cfg.r_grid[r_index], cfg.p);
    RngStream stream(cfg.seed, (static_cast<std::uint64_t>(r_index) << 32) |
                                   static_cast<std::uint64_t>(rep));
    std::vector<double> xs(static_cast<std::size_t>(cfg.n));
    double raw_sum = 0.0;
    for (auto& x : xs) {
        const std::int64_t k = sample_nb(stream, params);
        raw_sum += static_cast<double>(k);
        x = jitter(stream, k, false);
    }
    RepOutcome out;
    try {
        out.robust = robust_estimate_p(xs, params.r()).value;
        out.ml = cfg.ml_input == MlInput::jittered
                     ? ml_estimate_p(xs, params.r()).value
                     : ml_estimate_p_from_sum(raw_sum, xs.size(), params.r()).value;
    } catch (const DegenerateSample&) {
        out.degenerate = true;
    }
    return out;
}

SimRow summarize(double r, double p, std::span<const RepOutcome> outcomes) {
    detail::CompensatedSum robust_err, ml_err, robust_sq, ml_sq;
    std::int64_t degenerate = 0;
    std::int64_t used = 0;
    for (const auto& o : outcomes) {
        if (o.degenerate) {
            ++degenerate;
            continue;
        }
        ++used;
        robust_err.add(o.robust - p);
        ml_err.add(o.ml - p);
        robust_sq.add((o.robust - p) * (o.robust - p));
        ml_sq.add((o.ml - p) * (o.ml - p));
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    SimRow row{r, nan, nan, nan, nan, nan, degenerate};
    if (used > 0) {
        const double count = static_cast<double>(used);
        row.bias_robust = robust_err.value() / count;
        row.bias_ml = ml_err.value() / count;
        row.rmse_robust = std::sqrt(robust_sq.value() / count);
        row.rmse_ml = std::sqrt(ml_sq.value() / count);
        if (row.rmse_ml > 0.0) {
            row.rmse_ratio = row.rmse_robust / row.rmse_ml;
        }
    }
    return row;
}

}  // namespace

SimReport run_bias_rmse_experiment(const SimConfig& cfg) {
    cfg.validate();
    const std::size_t n_r = cfg.r_grid.size();
    const auto reps = static_cast<std::size_t>(cfg.reps);
    const std::size_t total = n_r * reps;
    std::vector<RepOutcome> outcomes(total);

    unsigned threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, 64);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t task = next.fetch_add(1); task < total; task = next.fetch_add(1)) {
            outcomes[task] = run_replication(cfg, task / reps, static_cast<std::int64_t>(task % reps));
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }

    SimReport report{cfg, {}};
    report.rows.reserve(n_r);
    for (std::size_t i = 0; i < n_r; ++i) {
        const std::span<const RepOutcome> block(outcomes.data() + i * reps, reps);
        report.rows.push_back(summarize(cfg.r_grid[i], cfg.p, block));
    }
    return report;
}

}  // namespace nbgauss
