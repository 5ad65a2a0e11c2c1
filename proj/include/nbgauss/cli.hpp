#ifndef NBGAUSS_CLI_HPP
#define NBGAUSS_CLI_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "nbgauss/montecarlo.hpp"
#include "nbgauss/table.hpp"

namespace nbgauss::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kIoError = 1,
    kUsageError = 2,
};

/// min, min + step, ... up to max (inclusive, with a relative slack of 1e-9
/// steps). Points are computed as min + i * step, not by accumulation.
/// Throws std::invalid_argument for step <= 0 or max < min.
std::vector<double> arithmetic_grid(double min, double max, double step);

/// median-scan: r, integer_median_minus_mean, jittered_median, asymptotic,
/// residual.
Table median_scan_table(double p, std::span<const double> r_grid);

/// estimator-sim: r, bias_robust, bias_ml, rmse_robust, rmse_ml, rmse_ratio,
/// degenerate_count.
Table estimator_sim_table(const SimConfig& cfg);

/// llt-error: r, max_abs_err_ratio_expansion, max_abs_err_corrected_cdf,
/// max_abs_err_classical_cdf, fitted_slope. Maxima run over the integer
/// bulk for the given eta. The summary row has r = "slope", the log-log
/// slope of each error column in its own column, and fitted_slope set to
/// the corrected-cdf slope.
Table llt_error_table(double p, std::span<const double> r_list, double eta);

/// tv-scaling: r, tv, quad_error_bound, tail_mass_bound. The summary row has
/// r = "slope" and the log-log slope of tv in the tv column.
Table tv_scaling_table(double p, std::span<const double> r_list);

/// poisson-median: lambda, integer_median_minus_lambda,
/// jittered_median_minus_lambda, residual_vs_one_third, eq12_ok.
/// eq12_ok is -ln 2 <= Med(N) - lambda < 1/3.
Table poisson_median_table(std::span<const double> lambdas);

/// Runs the tool on args (program name excluded). Results go to out unless
/// --out names a file; diagnostics and usage go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nbgauss::cli

#endif  // NBGAUSS_CLI_HPP
