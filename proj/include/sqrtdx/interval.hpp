#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sqrtdx {

/// Closed interval [a, b] with finite endpoints and a < b.
class Interval {
  public:
    Interval(double a, double b) : a_(a), b_(b) {
        if (!std::isfinite(a) || !std::isfinite(b))
            throw std::invalid_argument("Interval: endpoints must be finite");
        if (!(a < b))
            throw std::invalid_argument("Interval: requires a < b");
    }

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double width() const noexcept { return b_ - a_; }

  private:
    double a_;
    double b_;
};

/// Exponent alpha in (0, 1] applied to the subinterval lengths; alpha = 1/2
/// is the square-root case and alpha = 1 recovers the ordinary Riemann sum.
class FractionalOrder {
  public:
    explicit FractionalOrder(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0) || !(alpha <= 1.0))
            throw std::invalid_argument("FractionalOrder: alpha must lie in (0, 1]");
    }

    static FractionalOrder half() { return FractionalOrder(0.5); }
    static FractionalOrder whole() { return FractionalOrder(1.0); }

    double alpha() const noexcept { return alpha_; }

  private:
    double alpha_;
};

/// Normalizing factor gamma(n) = n^(alpha - 1); equals 1/sqrt(n) at alpha = 1/2
/// and is identically 1 at alpha = 1.
inline double correction_factor(std::int64_t n, FractionalOrder order = FractionalOrder::half()) {
    if (n < 1)
        throw std::invalid_argument("correction_factor: n must be >= 1");
    if (order.alpha() == 1.0)
        return 1.0;
    return std::pow(static_cast<double>(n), order.alpha() - 1.0);
}

/// Partition a = x_0 < x_1 < ... < x_n = b of an interval into n subintervals.
class Partition {
  public:
    Partition(Interval interval, std::vector<double> points)
        : interval_(interval), points_(std::move(points)) {
        if (points_.size() < 2)
            throw std::invalid_argument("Partition: needs at least two points");
        if (points_.front() != interval_.a() || points_.back() != interval_.b())
            throw std::invalid_argument("Partition: points must span the interval");
        for (std::size_t i = 1; i < points_.size(); ++i)
            if (!(points_[i - 1] < points_[i]))
                throw std::invalid_argument("Partition: points must be strictly increasing");
    }

    /// The n+1 equally spaced points x_i = a + i*(b-a)/n.
    static Partition uniform(Interval interval, std::int64_t n) {
        if (n < 1)
            throw std::invalid_argument("Partition::uniform: n must be >= 1");
        std::vector<double> pts(static_cast<std::size_t>(n) + 1);
        const double h = interval.width() / static_cast<double>(n);
        pts[0] = interval.a();
        for (std::int64_t i = 1; i < n; ++i)
            pts[static_cast<std::size_t>(i)] = interval.a() + static_cast<double>(i) * h;
        pts[static_cast<std::size_t>(n)] = interval.b();
        return Partition(interval, std::move(pts));
    }

    const Interval& interval() const noexcept { return interval_; }
    std::int64_t subintervals() const noexcept {
        return static_cast<std::int64_t>(points_.size()) - 1;
    }
    const std::vector<double>& points() const noexcept { return points_; }

  private:
    Interval interval_;
    std::vector<double> points_;
};

/// Endpoint used to sample the integrand inside each subinterval.
enum class SampleRule { left, right, midpoint };

} // namespace sqrtdx
