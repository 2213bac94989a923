#pragma once

#include <cmath>
#include <stdexcept>

#include "interval.hpp"
#include "kahan.hpp"

namespace sqrtdx {

/// Composite 5-point Gauss-Legendre rule with `panels` equal subintervals.
/// Exact for polynomials of degree <= 9 per panel; plenty for the smooth
/// integrands this library feeds it.
template <typename F>
double integrate_gl(F&& f, const Interval& interval, int panels = 64) {
    if (panels < 1)
        throw std::invalid_argument("integrate_gl: panels must be >= 1");
    // Nodes/weights on [-1, 1] from the closed forms for n = 5.
    static const double x1 = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    static const double x2 = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    static const double w0 = 128.0 / 225.0;
    static const double w1 = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
    static const double w2 = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
    static const double nodes[5] = {-x2, -x1, 0.0, x1, x2};
    static const double weights[5] = {w2, w1, w0, w1, w2};

    const double h = interval.width() / panels;
    KahanSum acc;
    for (int p = 0; p < panels; ++p) {
        const double mid = interval.a() + (p + 0.5) * h;
        for (int j = 0; j < 5; ++j)
            acc.add(weights[j] * f(mid + 0.5 * h * nodes[j]));
    }
    return 0.5 * h * acc.value();
}

} // namespace sqrtdx
