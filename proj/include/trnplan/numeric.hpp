#pragma once

namespace trnplan {

// Kahan compensated accumulator. Reductions over trial results must run in a
// fixed order to stay bitwise reproducible; compensation keeps the mean
// accurate over thousands of terms.
class KahanSum {
public:
    void add(double x) noexcept {
        const double y = x - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }

    double value() const noexcept { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace trnplan
