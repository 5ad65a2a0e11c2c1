#include "nbgauss/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "nbgauss/correction.hpp"
#include "nbgauss/exactdist.hpp"
#include "nbgauss/fit.hpp"
#include "nbgauss/llt.hpp"
#include "nbgauss/median.hpp"
#include "nbgauss/tvdist.hpp"

namespace nbgauss::cli {

std::vector<double> arithmetic_grid(double min, double max, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("grid step must be positive");
    }
    if (!(max >= min)) {
        throw std::invalid_argument("grid maximum must not be below the minimum");
    }
    const auto count = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = min + static_cast<double>(i) * step;
    }
    return grid;
}

Table median_scan_table(double p, std::span<const double> r_grid) {
    Table table{{"r", "integer_median_minus_mean", "jittered_median", "asymptotic", "residual"},
                {},
                std::nullopt};
    for (const auto& row : median_scan(p, r_grid)) {
        table.add_row({row.r, row.integer_median_minus_mean, row.report.exact,
                       row.report.asymptotic, row.report.residual});
    }
    return table;
}

Table estimator_sim_table(const SimConfig& cfg) {
    Table table{{"r", "bias_robust", "bias_ml", "rmse_robust", "rmse_ml", "rmse_ratio",
                 "degenerate_count"},
                {},
                std::nullopt};
    for (const auto& row : run_bias_rmse_experiment(cfg).rows) {
        table.add_row({row.r, row.bias_robust, row.bias_ml, row.rmse_robust, row.rmse_ml,
                       row.rmse_ratio, row.degenerate_count});
    }
    return table;
}

namespace {

void require_probability(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("p must lie in (0, 1)");
    }
}

void require_positive_list(std::span<const double> values, const char* name) {
    if (values.empty()) {
        throw std::invalid_argument(std::string(name) + " list is empty");
    }
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string(name) + " values must be positive");
        }
    }
}

struct BulkErrors {
    double ratio_expansion = 0.0;
    double corrected_cdf = 0.0;
    double classical_cdf = 0.0;
};

BulkErrors max_bulk_errors(const NBParams& params, const BulkSpec& spec) {
    const IndexRange bulk = bulk_range(params, spec);
    BulkErrors errors;
    for (std::int64_t k = bulk.lo; k <= bulk.hi; ++k) {
        const double exact_cdf = nb_cdf(params, k);
        errors.ratio_expansion =
            std::max(errors.ratio_expansion,
                     std::fabs(exact_pmf_ratio(params, k) - llt_ratio(params, k, spec).value));
        errors.corrected_cdf =
            std::max(errors.corrected_cdf, std::fabs(corrected_cdf(params, k) - exact_cdf));
        errors.classical_cdf =
            std::max(errors.classical_cdf, std::fabs(classical_cdf(params, k) - exact_cdf));
    }
    return errors;
}

Cell slope_cell(std::span<const double> x, std::span<const double> y) {
    if (x.size() < 2) {
        return std::monostate{};
    }
    try {
        return log_log_slope(x, y);
    } catch (const std::domain_error&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

}  // namespace

Table llt_error_table(double p, std::span<const double> r_list, double eta) {
    require_probability(p);
    require_positive_list(r_list, "r");
    const BulkSpec spec(eta);
    Table table{{"r", "max_abs_err_ratio_expansion", "max_abs_err_corrected_cdf",
                 "max_abs_err_classical_cdf", "fitted_slope"},
                {},
                std::nullopt};
    std::vector<double> ratio_err, corrected_err, classical_err;
    for (double r : r_list) {
        const BulkErrors e = max_bulk_errors(NBParams(r, p), spec);
        ratio_err.push_back(e.ratio_expansion);
        corrected_err.push_back(e.corrected_cdf);
        classical_err.push_back(e.classical_cdf);
        table.add_row({r, e.ratio_expansion, e.corrected_cdf, e.classical_cdf, std::monostate{}});
    }
    const Cell corrected_slope = slope_cell(r_list, corrected_err);
    table.summary = Row{std::string("slope"), slope_cell(r_list, ratio_err), corrected_slope,
                        slope_cell(r_list, classical_err), corrected_slope};
    return table;
}

Table tv_scaling_table(double p, std::span<const double> r_list) {
    require_probability(p);
    require_positive_list(r_list, "r");
    Table table{{"r", "tv", "quad_error_bound", "tail_mass_bound"}, {}, std::nullopt};
    std::vector<double> tvs;
    for (double r : r_list) {
        const TVReport report = tv_jittered_vs_normal(NBParams(r, p));
        tvs.push_back(report.tv);
        table.add_row({r, report.tv, report.quad_error_bound, report.tail_mass_bound});
    }
    table.summary =
        Row{std::string("slope"), slope_cell(r_list, tvs), std::monostate{}, std::monostate{}};
    return table;
}

Table poisson_median_table(std::span<const double> lambdas) {
    require_positive_list(lambdas, "lambda");
    Table table{{"lambda", "integer_median_minus_lambda", "jittered_median_minus_lambda",
                 "residual_vs_one_third", "eq12_ok"},
                {},
                std::nullopt};
    for (double lambda : lambdas) {
        const PoissonParams params(lambda);
        const double integer_gap =
            static_cast<double>(poisson_integer_median(params)) - lambda;
        const double jittered_gap = exact_jittered_median_poisson(params) - lambda;
        const bool bounds_ok = integer_gap >= -std::log(2.0) && integer_gap < 1.0 / 3.0;
        table.add_row({lambda, integer_gap, jittered_gap, jittered_gap - 1.0 / 3.0, bounds_ok});
    }
    return table;
}

// ---------------------------------------------------------------------------

namespace {

struct GridOptions {
    double min;
    double max;
    double step;
    std::vector<double> list;

    std::vector<double> resolve() const {
        return list.empty() ? arithmetic_grid(min, max, step) : list;
    }
};

void add_grid_options(CLI::App* cmd, GridOptions& grid, const std::string& name) {
    cmd->add_option("--" + name + "-min", grid.min, "Grid start")->capture_default_str();
    cmd->add_option("--" + name + "-max", grid.max, "Grid end (inclusive)")->capture_default_str();
    cmd->add_option("--" + name + "-step", grid.step, "Grid spacing")->capture_default_str();
    cmd->add_option("--" + name + "-list", grid.list,
                    "Explicit comma-separated values; overrides min/max/step")
        ->delimiter(',');
}

struct OutputOptions {
    std::string path;
    std::string format = "csv";
};

void add_output_options(CLI::App* cmd, OutputOptions& output) {
    cmd->add_option("--out", output.path, "Output file (standard output when omitted or '-')");
    cmd->add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

int emit(const Table& table, const OutputOptions& output, std::ostream& out, std::ostream& err) {
    const OutputFormat format = output.format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (output.path.empty() || output.path == "-") {
        table.write(out, format);
        out.flush();
        if (!out) {
            err << "error: failed to write to standard output\n";
            return kIoError;
        }
        return kSuccess;
    }
    std::ofstream file(output.path, std::ios::out | std::ios::trunc);
    if (!file) {
        err << "error: cannot open '" << output.path << "' for writing\n";
        return kIoError;
    }
    table.write(file, format);
    file.close();
    if (!file) {
        err << "error: failed writing '" << output.path << "'\n";
        return kIoError;
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gaussian approximation experiments for the negative binomial distribution",
                 "nbgauss"};
    app.require_subcommand(1);

    OutputOptions output;

    double median_p = 0.5;
    GridOptions median_grid{1.0, 500.0, 1.0, {}};
    auto* median_cmd = app.add_subcommand(
        "median-scan", "Exact and asymptotic jittered medians over a grid of r");
    median_cmd->add_option("--p", median_p, "Success probability")->capture_default_str();
    add_grid_options(median_cmd, median_grid, "r");
    add_output_options(median_cmd, output);

    double sim_p = 0.5;
    GridOptions sim_grid{0.5, 15.0, 0.25, {}};
    std::int64_t sim_n = 200;
    std::int64_t sim_reps = 2000;
    std::uint64_t sim_seed = 1;
    unsigned sim_threads = 0;
    std::string sim_ml_input = "jittered";
    bool full_scale = false;
    auto* sim_cmd = app.add_subcommand(
        "estimator-sim", "Bias and RMSE of the median-based and ML estimators of p");
    sim_cmd->add_option("--p", sim_p, "Success probability")->capture_default_str();
    add_grid_options(sim_cmd, sim_grid, "r");
    sim_cmd->add_option("--n", sim_n, "Sample size")->capture_default_str();
    sim_cmd->add_option("--reps", sim_reps, "Replications per r")->capture_default_str();
    sim_cmd->add_option("--seed", sim_seed, "Random seed")->capture_default_str();
    sim_cmd->add_option("--threads", sim_threads, "Worker threads (0: all cores)")
        ->capture_default_str();
    sim_cmd->add_option("--ml-input", sim_ml_input, "Observations used by the ML estimator")
        ->check(CLI::IsMember({"jittered", "raw"}))
        ->capture_default_str();
    sim_cmd->add_flag("--full-scale", full_scale, "Use 10000 replications");
    add_output_options(sim_cmd, output);

    double llt_p = 0.5;
    std::vector<double> llt_r_list{100, 400, 1600, 6400};
    double llt_eta = 0.5;
    auto* llt_cmd = app.add_subcommand(
        "llt-error", "Bulk errors of the local expansion and the continuity corrections");
    llt_cmd->add_option("--p", llt_p, "Success probability")->capture_default_str();
    llt_cmd->add_option("--r-list", llt_r_list, "Comma-separated r values")
        ->delimiter(',')
        ->capture_default_str();
    llt_cmd->add_option("--eta", llt_eta, "Bulk width parameter in (0, 1)")->capture_default_str();
    add_output_options(llt_cmd, output);

    double tv_p = 0.5;
    std::vector<double> tv_r_list{16, 64, 256, 1024};
    auto* tv_cmd = app.add_subcommand(
        "tv-scaling", "Total variation between the jittered law and the matched normal");
    tv_cmd->add_option("--p", tv_p, "Success probability")->capture_default_str();
    tv_cmd->add_option("--r-list", tv_r_list, "Comma-separated r values")
        ->delimiter(',')
        ->capture_default_str();
    add_output_options(tv_cmd, output);

    GridOptions lambda_grid{5.0, 500.0, 5.0, {}};
    auto* poisson_cmd = app.add_subcommand(
        "poisson-median", "Integer and jittered Poisson medians against lambda + 1/3");
    add_grid_options(poisson_cmd, lambda_grid, "lambda");
    add_output_options(poisson_cmd, output);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    CLI::App* active = app.get_subcommands().front();
    Table table;
    try {
        if (active == median_cmd) {
            require_probability(median_p);
            table = median_scan_table(median_p, median_grid.resolve());
        } else if (active == sim_cmd) {
            SimConfig cfg;
            cfg.n = sim_n;
            cfg.reps = full_scale ? 10000 : sim_reps;
            cfg.p = sim_p;
            cfg.r_grid = sim_grid.resolve();
            cfg.seed = sim_seed;
            cfg.threads = sim_threads;
            cfg.ml_input = sim_ml_input == "raw" ? MlInput::raw : MlInput::jittered;
            cfg.validate();
            table = estimator_sim_table(cfg);
        } else if (active == llt_cmd) {
            table = llt_error_table(llt_p, llt_r_list, llt_eta);
        } else if (active == tv_cmd) {
            table = tv_scaling_table(tv_p, tv_r_list);
        } else {
            table = poisson_median_table(lambda_grid.resolve());
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n\n" << active->help();
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n\n" << active->help();
        return kUsageError;
    }
    return emit(table, output, out, err);
}

}  // namespace nbgauss::cli
