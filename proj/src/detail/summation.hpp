#ifndef NBGAUSS_DETAIL_SUMMATION_HPP
#define NBGAUSS_DETAIL_SUMMATION_HPP

#include <cmath>

namespace nbgauss::detail {

// Neumaier's compensated summation.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace nbgauss::detail

#endif  // NBGAUSS_DETAIL_SUMMATION_HPP
