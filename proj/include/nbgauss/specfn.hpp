#ifndef NBGAUSS_SPECFN_HPP
#define NBGAUSS_SPECFN_HPP

// Scalar special functions shared by every other module.
//
// All functions are pure; none keep state between calls.

namespace nbgauss {

/// Natural log of the gamma function for x > 0.
///
/// Relative error is at the level of a few ulp over [1e-6, 1e12].
/// Throws std::domain_error when x is not a finite positive number.
double log_gamma(double x);

/// Stirling series remainder ln Gamma(n + 1) - (n + 1/2) ln n + n - ln sqrt(2 pi)
/// for n > 0. Small n use log_gamma directly, larger n the asymptotic series.
double stirling_error(double n);

/// x ln(x / m) + m - x for x >= 0, m > 0, without cancellation when x is
/// close to m.
double deviance_term(double x, double m);

/// Standard normal density.
double normal_pdf(double z);

/// Standard normal distribution function Phi(z).
///
/// The lower tail is evaluated directly, never as 1 - Psi(z), so the
/// relative accuracy holds deep into the left tail.
double normal_cdf(double z);

/// Standard normal survival function Psi(z) = P(Z > z), evaluated directly.
double normal_survival(double z);

}  // namespace nbgauss

#endif  // NBGAUSS_SPECFN_HPP
