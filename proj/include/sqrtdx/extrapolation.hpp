#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sqrtdx {

struct ConvergenceSample {
    std::int64_t n;
    double value;
};

/// Result of extrapolating a sequence value(n) -> L as n -> infinity.
///
/// `extrapolants[k]` is the best extrapolated estimate using samples 0..k;
/// `residual` is the absolute difference of the last two of those estimates
/// and acts as the convergence indicator. `fitted_rate` is the least-squares
/// decay order p in |value(n) - L| ~ n^{-p} (NaN when the errors are already
/// at rounding level and no rate can be fitted).
struct ConvergenceReport {
    std::vector<ConvergenceSample> samples;
    std::vector<double> extrapolants;
    double extrapolated_limit = 0.0;
    double fitted_rate = std::numeric_limits<double>::quiet_NaN();
    double residual = 0.0;

    bool converged(double tolerance) const noexcept { return residual <= tolerance; }
};

/// Thrown when a sequence fails to meet the requested tolerance; carries the
/// full report so callers can still inspect or print the samples.
class NonConvergence : public std::runtime_error {
  public:
    explicit NonConvergence(ConvergenceReport report)
        : std::runtime_error("sequence did not converge: residual " +
                             std::to_string(report.residual)),
          report_(std::move(report)) {}

    const ConvergenceReport& report() const noexcept { return report_; }

  private:
    ConvergenceReport report_;
};

namespace detail {

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t m = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

} // namespace detail

/// Richardson extrapolation of samples assumed to follow
/// value(n) = L + c1/n + c2/n^2 + ..., i.e. polynomial in t = 1/n.
/// Implemented as Neville's tableau evaluated at t = 0; the first column is
/// the plain two-point L + c/n elimination and deeper columns cancel the
/// higher-order terms. Works for any strictly increasing schedule.
inline ConvergenceReport extrapolate(std::vector<ConvergenceSample> samples) {
    const std::size_t m = samples.size();
    if (m < 3)
        throw std::invalid_argument("extrapolate: needs at least 3 samples");
    for (std::size_t i = 0; i < m; ++i) {
        if (samples[i].n < 1 || (i > 0 && samples[i].n <= samples[i - 1].n))
            throw std::invalid_argument("extrapolate: n values must be strictly increasing");
    }

    std::vector<double> t(m);
    for (std::size_t i = 0; i < m; ++i)
        t[i] = 1.0 / static_cast<double>(samples[i].n);

    // tableau[k] holds T_{k,j} for the current column j; diagonal collected.
    std::vector<double> column(m);
    for (std::size_t k = 0; k < m; ++k)
        column[k] = samples[k].value;
    std::vector<double> diagonal(m);
    diagonal[0] = column[0];
    for (std::size_t j = 1; j < m; ++j) {
        for (std::size_t k = m - 1; k >= j; --k) {
            const double ratio = t[k - j] / t[k];
            column[k] = column[k] + (column[k] - column[k - 1]) / (ratio - 1.0);
        }
        diagonal[j] = column[j];
    }

    ConvergenceReport report;
    report.samples = std::move(samples);
    report.extrapolants = std::move(diagonal);
    report.extrapolated_limit = report.extrapolants.back();
    report.residual = std::fabs(report.extrapolants[m - 1] - report.extrapolants[m - 2]);

    // Fit |value(n) - L| ~ n^{-p}, skipping samples already at rounding level.
    const double floor_scale =
        std::max(1.0, std::fabs(report.extrapolated_limit)) * 1e-14;
    std::vector<double> lx, ly;
    for (const auto& s : report.samples) {
        const double err = std::fabs(s.value - report.extrapolated_limit);
        if (err > floor_scale) {
            lx.push_back(std::log(static_cast<double>(s.n)));
            ly.push_back(std::log(err));
        }
    }
    if (lx.size() >= 2)
        report.fitted_rate = -detail::fit_slope(lx, ly);
    return report;
}

/// Geometric schedule {start, 2*start, ...} capped at max_n (inclusive).
inline std::vector<std::int64_t> doubling_schedule(std::int64_t start, std::int64_t max_n) {
    if (start < 1 || max_n < start)
        throw std::invalid_argument("doubling_schedule: requires 1 <= start <= max_n");
    std::vector<std::int64_t> out;
    for (std::int64_t n = start; n <= max_n; n *= 2)
        out.push_back(n);
    return out;
}

/// The stock schedule {64, 128, ..., 4096}.
inline std::vector<std::int64_t> default_schedule() { return doubling_schedule(64, 4096); }

inline constexpr double default_tolerance = 1e-9;

} // namespace sqrtdx
