#ifndef NBGAUSS_DETAIL_FORWARD_PMF_HPP
#define NBGAUSS_DETAIL_FORWARD_PMF_HPP

#include <cfloat>
#include <cmath>
#include <cstdint>

#include "detail/summation.hpp"

namespace nbgauss::detail {

// Walks a pmf on 0, 1, 2, ... keeping the current term and the running
// cumulative sum.
//
// Terms follow the ratio recurrence once they are normal numbers; while
// they are subnormal (the left tail of a law with a large mean) each one is
// recomputed from the log-pmf, so the recurrence never starts from an
// underflowed value.
template <class LogPmf, class Ratio>
class ForwardPmf {
public:
    ForwardPmf(LogPmf log_pmf, Ratio ratio) : log_pmf_(log_pmf), ratio_(ratio) {
        term_ = std::exp(log_pmf_(0));
        total_.add(term_);
    }

    std::int64_t index() const noexcept { return index_; }
    double term() const noexcept { return term_; }
    double cumulative() const noexcept { return total_.value(); }

    void advance() {
        if (term_ < DBL_MIN) {
            term_ = std::exp(log_pmf_(index_ + 1));
        } else {
            term_ *= ratio_(index_);
        }
        ++index_;
        total_.add(term_);
    }

private:
    LogPmf log_pmf_;
    Ratio ratio_;
    std::int64_t index_ = 0;
    double term_ = 0.0;
    CompensatedSum total_;
};

}  // namespace nbgauss::detail

#endif  // NBGAUSS_DETAIL_FORWARD_PMF_HPP
