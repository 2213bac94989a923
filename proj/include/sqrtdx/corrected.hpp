#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "extrapolation.hpp"
#include "interval.hpp"
#include "kahan.hpp"
#include "polynomial.hpp"

namespace sqrtdx {

template <typename F>
concept Integrand = std::invocable<F, double> &&
                    std::convertible_to<std::invoke_result_t<F, double>, double>;

/// Sum of sqrt(dx_i) over the uniform n-partition. All subintervals are
/// equal, so the sum is n * sqrt((b-a)/n) = sqrt((b-a) n); it grows without
/// bound, which is what the gamma correction repairs.
inline double naive_sqrt_sum(const Interval& interval, std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("naive_sqrt_sum: n must be >= 1");
    return static_cast<double>(n) * std::sqrt(interval.width() / static_cast<double>(n));
}

namespace detail {

inline double sample_point(const Interval& iv, double h, std::int64_t i, SampleRule rule) {
    switch (rule) {
        case SampleRule::left: return iv.a() + static_cast<double>(i - 1) * h;
        case SampleRule::right: return iv.a() + static_cast<double>(i) * h;
        case SampleRule::midpoint: return iv.a() + (static_cast<double>(i) - 0.5) * h;
    }
    return iv.a();
}

// Sum f(s_i) * h^alpha over the uniform partition, fixed index order i=1..n.
template <Integrand F>
double power_sum_uniform(F&& f, const Interval& iv, std::int64_t n, FractionalOrder order,
                         SampleRule rule) {
    if (n < 1)
        throw std::invalid_argument("corrected_sum: n must be >= 1");
    const double h = iv.width() / static_cast<double>(n);
    const double weight = std::pow(h, order.alpha());
    KahanSum acc;
    for (std::int64_t i = 1; i <= n; ++i)
        acc.add(f(sample_point(iv, h, i, rule)) * weight);
    return acc.value();
}

} // namespace detail

/// The corrected Riemann-style sum
///   gamma(n) * Sum_i f(s_i) * (dx_i)^alpha
/// over the uniform partition, with gamma(n) = n^(alpha-1) and s_i the chosen
/// sample point (right endpoints s_i = a + i h by default).
template <Integrand F>
double corrected_sum(F&& f, const Interval& interval, std::int64_t n,
                     FractionalOrder order = FractionalOrder::half(),
                     SampleRule rule = SampleRule::right) {
    return correction_factor(n, order) *
           detail::power_sum_uniform(std::forward<F>(f), interval, n, order, rule);
}

/// The same sum without the gamma(n) factor. Diverges for alpha < 1; exposed
/// purely as a diagnostic for the divergence experiments.
template <Integrand F>
double uncorrected_sum(F&& f, const Interval& interval, std::int64_t n,
                       FractionalOrder order = FractionalOrder::half(),
                       SampleRule rule = SampleRule::right) {
    return detail::power_sum_uniform(std::forward<F>(f), interval, n, order, rule);
}

/// Diagnostic overload over an arbitrary partition: gamma(n) Sum f(s_i) (dx_i)^alpha.
/// The defining limit is normative only for uniform partitions; non-uniform
/// meshes generally change the value.
template <Integrand F>
double corrected_sum(F&& f, const Partition& partition,
                     FractionalOrder order = FractionalOrder::half(),
                     SampleRule rule = SampleRule::right) {
    const auto& pts = partition.points();
    KahanSum acc;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double dx = pts[i] - pts[i - 1];
        double s = 0.0;
        switch (rule) {
            case SampleRule::left: s = pts[i - 1]; break;
            case SampleRule::right: s = pts[i]; break;
            case SampleRule::midpoint: s = 0.5 * (pts[i - 1] + pts[i]); break;
        }
        acc.add(f(s) * std::pow(dx, order.alpha()));
    }
    return correction_factor(partition.subintervals(), order) * acc.value();
}

/// Corrected integral as the n -> infinity limit of corrected sums, realized
/// by computing the sums over `schedule` and extrapolating (see
/// `extrapolate` for the error model). Throws NonConvergence -- with the
/// report attached -- if the residual exceeds `tolerance`; that is the
/// expected outcome when the correction factor is omitted or the order is
/// mismatched to the integrand.
template <Integrand F>
ConvergenceReport corrected_integral(F&& f, const Interval& interval, FractionalOrder order,
                                     std::span<const std::int64_t> schedule,
                                     double tolerance = default_tolerance,
                                     SampleRule rule = SampleRule::right) {
    if (schedule.size() < 3)
        throw std::invalid_argument("corrected_integral: schedule needs >= 3 entries");
    if (!(tolerance > 0.0))
        throw std::invalid_argument("corrected_integral: tolerance must be positive");
    std::vector<ConvergenceSample> samples;
    samples.reserve(schedule.size());
    for (const std::int64_t n : schedule)
        samples.push_back({n, corrected_sum(f, interval, n, order, rule)});
    ConvergenceReport report = extrapolate(std::move(samples));
    if (!report.converged(tolerance))
        throw NonConvergence(std::move(report));
    return report;
}

template <Integrand F>
ConvergenceReport corrected_integral(F&& f, const Interval& interval,
                                     FractionalOrder order = FractionalOrder::half()) {
    const auto schedule = default_schedule();
    return corrected_integral(std::forward<F>(f), interval, order, schedule);
}

/// Closed form of the corrected integral for polynomial integrands:
///   (b-a)^(alpha-1) * integral_a^b f(x) dx.
/// Serves as the oracle for the extrapolated route.
inline double corrected_integral_closed_form(const Polynomial& f, const Interval& interval,
                                             FractionalOrder order = FractionalOrder::half()) {
    return std::pow(interval.width(), order.alpha() - 1.0) * f.integral(interval);
}

/// Corrected integral of x^k at alpha = 1/2 via the finite binomial sum
///   sqrt(b-a) * Sum_{j=0..k} C(k,j) a^(k-j) (b-a)^j / (j+1),
/// the form the power-sum identities Sum i, Sum i^2, ... produce. Agrees with
/// corrected_integral_closed_form on x^k.
inline double monomial_corrected_formula(int k, const Interval& interval) {
    if (k < 0)
        throw std::invalid_argument("monomial_corrected_formula: k must be >= 0");
    const double a = interval.a();
    const double width = interval.width();
    double binom = 1.0; // C(k, j)
    double width_pow = 1.0;
    KahanSum acc;
    for (int j = 0; j <= k; ++j) {
        acc.add(binom * std::pow(a, k - j) * width_pow / static_cast<double>(j + 1));
        binom *= static_cast<double>(k - j) / static_cast<double>(j + 1);
        width_pow *= width;
    }
    return std::sqrt(width) * acc.value();
}

/// F(x) = corrected integral of 1 over [0, x] = sqrt(x), extended to x = 0 by
/// continuity.
inline double integral_function(double x) {
    if (x < 0.0 || std::isnan(x))
        throw std::domain_error("integral_function: requires x >= 0");
    return std::sqrt(x);
}

} // namespace sqrtdx
