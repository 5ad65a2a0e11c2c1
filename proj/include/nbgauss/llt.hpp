#ifndef NBGAUSS_LLT_HPP
#define NBGAUSS_LLT_HPP

#include <cstdint>

#include "nbgauss/exactdist.hpp"

namespace nbgauss {

/// Width parameter eta of the bulk
///
///     B(eta) = { k : |delta_k / sqrt(r p)| <= eta r^(-1/3) }.
class BulkSpec {
public:
    /// Throws std::invalid_argument unless 0 < eta < 1.
    explicit BulkSpec(double eta);

    double eta() const noexcept { return eta_; }

private:
    double eta_;
};

/// An asymptotic expansion split into its orders.
///
/// value = base + term_half + term_one, where base is 0 for the log form
/// and 1 for the ratio form. remainder_scale is the nominal size of the
/// neglected O(.) term; it is reported, never added to value.
struct ExpansionResult {
    double value;
    double term_half;  ///< (r p)^(-1/2) contribution
    double term_one;   ///< (r p)^(-1) contribution
    double remainder_scale;
};

/// Inclusive integer index range.
struct IndexRange {
    std::int64_t lo;
    std::int64_t hi;

    bool empty() const noexcept { return hi < lo; }
};

/// Standardized coordinate (k - mean) / sd. Real k is allowed.
double delta_k(const NBParams& params, double k);

bool in_bulk(const NBParams& params, const BulkSpec& spec, double k);

/// The non-negative integers that lie in the bulk.
IndexRange bulk_range(const NBParams& params, const BulkSpec& spec);

/// Expansion of ln( P(k) / (q phi(delta_k) / sqrt(r p)) ) through order
/// (r p)^-1. The expansion has no constant term.
///
/// Uses eta = 1/2 for the remainder scale; see the overload to choose it.
ExpansionResult llt_log_ratio(const NBParams& params, std::int64_t k);
ExpansionResult llt_log_ratio(const NBParams& params, std::int64_t k, const BulkSpec& spec);

/// Expansion of P(k) / (q phi(delta_k) / sqrt(r p)) through order (r p)^-1.
ExpansionResult llt_ratio(const NBParams& params, std::int64_t k);
ExpansionResult llt_ratio(const NBParams& params, std::int64_t k, const BulkSpec& spec);

/// The exact ratio P(k) / (q phi(delta_k) / sqrt(r p)), computed in log space.
double exact_pmf_ratio(const NBParams& params, std::int64_t k);

}  // namespace nbgauss

#endif  // NBGAUSS_LLT_HPP
