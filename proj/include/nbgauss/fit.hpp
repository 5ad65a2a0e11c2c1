#ifndef NBGAUSS_FIT_HPP
#define NBGAUSS_FIT_HPP

#include <span>

namespace nbgauss {

/// Least-squares slope of ln y against ln x.
///
/// Throws std::domain_error for mismatched sizes, fewer than two points or
/// non-positive values.
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace nbgauss

#endif  // NBGAUSS_FIT_HPP
