"""Gaussian approximations for the negative binomial distribution."""

from ._core import (
    NBParams,
    PoissonParams,
    c_star,
    classical_cdf,
    corrected_cdf,
    corrected_survival,
    delta_k,
    bulk_range,
    exact_jittered_median_nb,
    exact_jittered_median_poisson,
    asymptotic_jittered_median_nb,
    exact_pmf_ratio,
    llt_ratio,
    llt_log_ratio,
    median_scan,
    ml_estimate_p,
    nb_cdf,
    nb_pmf,
    nb_survival,
    nb_integer_median,
    nb_central_moment,
    poisson_cdf,
    poisson_pmf,
    poisson_integer_median,
    robust_estimate_p,
    run_bias_rmse_experiment,
    sample_nb,
    tv_jittered_vs_normal,
    log_log_slope,
    run_cli,
)

__all__ = [name for name in dir() if not name.startswith("_")]
