#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "gamma.hpp"
#include "interval.hpp"
#include "quadrature.hpp"

namespace sqrtdx {

/// Inputs of a Riemann-Liouville fractional integral evaluation. Only the
/// half order (1/2) is evaluable; the field exists so callers can carry other
/// orders in (0, 1] around, but evaluation rejects them.
struct FractionalIntegralSpec {
    std::function<double(double)> integrand;
    Interval interval;
    double order = 0.5;
    int quadrature_points = 64; // composite Gauss-Legendre panels

    FractionalIntegralSpec(std::function<double(double)> f, Interval iv, double mu = 0.5,
                           int points = 64)
        : integrand(std::move(f)), interval(iv), order(mu), quadrature_points(points) {
        if (!(order > 0.0) || !(order <= 1.0))
            throw std::invalid_argument("FractionalIntegralSpec: order must lie in (0, 1]");
        if (quadrature_points < 2)
            throw std::invalid_argument("FractionalIntegralSpec: quadrature_points must be >= 2");
    }
};

/// Half-order Riemann-Liouville integral over [a, b]:
///   (1/Gamma(1/2)) * integral_a^b (b-t)^(-1/2) f(t) dt.
/// The endpoint singularity is removed exactly by u = sqrt(b - t), leaving
///   (2/Gamma(1/2)) * integral_0^sqrt(b-a) f(b - u^2) du
/// with a smooth integrand that composite Gauss-Legendre handles directly.
template <typename F>
double riemann_liouville_half_integral(F&& f, const Interval& interval, int quadrature_points = 64) {
    if (quadrature_points < 2)
        throw std::invalid_argument(
            "riemann_liouville_half_integral: quadrature_points must be >= 2");
    const double b = interval.b();
    const Interval transformed(0.0, std::sqrt(interval.width()));
    const double inner =
        integrate_gl([&](double u) { return f(b - u * u); }, transformed, quadrature_points);
    return 2.0 / gamma_function(0.5) * inner;
}

inline double riemann_liouville_half_integral(const FractionalIntegralSpec& spec) {
    if (spec.order != 0.5)
        throw std::invalid_argument("riemann_liouville_half_integral: only order 1/2 is supported");
    return riemann_liouville_half_integral(spec.integrand, spec.interval, spec.quadrature_points);
}

/// Closed form of the half integral of the constant 1:
///   D^(-1/2) 1 = 2 sqrt(b-a) / Gamma(1/2).
inline double half_integral_of_one(const Interval& interval) {
    return 2.0 * std::sqrt(interval.width()) / gamma_function(0.5);
}

/// Beta integral in closed form:
///   integral_0^x (x-y)^d y^p dy = Gamma(d+1) Gamma(p+1) / Gamma(d+p+2) * x^(d+p+1).
/// Requires d > -1 and p > -1 (the integral diverges otherwise) and x > 0.
inline double beta_integral_closed_form(double d, double p, double x) {
    if (!(d > -1.0) || !(p > -1.0))
        throw std::domain_error("beta_integral_closed_form: requires d > -1 and p > -1");
    if (!(x > 0.0))
        throw std::domain_error("beta_integral_closed_form: requires x > 0");
    return gamma_function(d + 1.0) * gamma_function(p + 1.0) / gamma_function(d + p + 2.0) * std::pow(x, d + p + 1.0);
}

/// Bridge between the two formalisms for f = 1:
///   (Gamma(1/2)/2) * D^(-1/2) 1 = sqrt(b-a),
/// i.e. the corrected integral and the half integral of 1 differ by the
/// constant factor Gamma(1/2)/2 only.
inline double corrected_vs_fractional_bridge(const Interval& interval) {
    return 0.5 * gamma_function(0.5) * half_integral_of_one(interval);
}

} // namespace sqrtdx
