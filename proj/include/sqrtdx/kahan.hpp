#pragma once

namespace sqrtdx {

/// Kahan compensated accumulator. Keeps long fixed-order sums accurate to a
/// couple of ulps independent of the term count.
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

} // namespace sqrtdx
