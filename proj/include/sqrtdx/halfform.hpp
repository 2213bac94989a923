#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "corrected.hpp"
#include "expression.hpp"
#include "interval.hpp"
#include "polynomial.hpp"
#include "quadrature.hpp"

namespace sqrtdx {

/// Half-density on the line: a map nu from frames (nonzero reals) to C with
/// nu(a*v) = nu(v) |a|^(1/2). Storing the value at the canonical frame v = 1
/// pins the whole map.
class HalfDensity {
  public:
    explicit HalfDensity(std::complex<double> base_value) : base_(base_value) {}

    std::complex<double> base_value() const noexcept { return base_; }

    /// nu(frame) = nu(1) * |frame|^(1/2); frame must be nonzero to be a frame.
    std::complex<double> evaluate(double frame) const {
        if (frame == 0.0 || std::isnan(frame))
            throw std::domain_error("HalfDensity::evaluate: 0 is not a frame");
        return base_ * std::sqrt(std::fabs(frame));
    }

  private:
    std::complex<double> base_;
};

inline std::complex<double> evaluate_half_density(const HalfDensity& nu, double frame) {
    return nu.evaluate(frame);
}

/// Half-form sigma = f(x) sqrt(dx) over an interval, f real-valued.
struct HalfForm {
    Expression coefficient;
    Interval interval;
};

/// Ordinary one-form g(x) dx over an interval.
struct OneForm {
    Expression coefficient;
    Interval interval;
};

/// sqrt(dx) (x) sqrt(dx) = dx: squaring a half-form squares its coefficient.
inline OneForm tensor_square(const HalfForm& sigma) {
    return OneForm{sigma.coefficient * sigma.coefficient, sigma.interval};
}

/// ||sigma||^2 = integral of |f|^2 over the interval. Exact antiderivative
/// for polynomial coefficients, composite quadrature otherwise.
inline double norm_squared(const HalfForm& sigma) {
    if (auto poly = as_polynomial(sigma.coefficient))
        return (*poly * *poly).integral(sigma.interval);
    const auto& f = sigma.coefficient;
    return integrate_gl([&](double x) { const double v = f(x); return v * v; },
                        sigma.interval, 256);
}

/// The corrected integral as a map from half-forms to R: the corrected
/// integral of the coefficient at alpha = 1/2. For sigma = sqrt(dx) this is
/// sqrt(b-a), whose square is the norm; for general coefficients the
/// square-root relation fails (the map is linear, the norm quadratic).
inline double corrected_integral_map(const HalfForm& sigma,
                                     double tolerance = default_tolerance) {
    const auto schedule = default_schedule();
    const auto report = corrected_integral(sigma.coefficient, sigma.interval,
                                           FractionalOrder::half(),
                                           std::span<const std::int64_t>(schedule), tolerance);
    return report.extrapolated_limit;
}

} // namespace sqrtdx
