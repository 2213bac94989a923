#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "kahan.hpp"

namespace sqrtdx {

/// The two zeta values the asymptotic formulas need, pinned as doubles and
/// validated in the test suite against an Euler-Maclaurin zeta oracle.
struct ZetaConstants {
    double zeta_three_halves = 2.612375348685488;  // zeta(3/2)
    double zeta_half = -1.4603545088095868;        // zeta(1/2)
};

/// sqrt(1) + sqrt(2) + ... + sqrt(n), summed in increasing k order with
/// compensation.
inline double sqrt_sum_direct(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("sqrt_sum_direct: n must be >= 1");
    KahanSum acc;
    for (std::int64_t k = 1; k <= n; ++k)
        acc.add(std::sqrt(static_cast<double>(k)));
    return acc.value();
}

/// Ramanujan's expansion of the sum of square roots, the four displayed
/// terms: (2/3) n sqrt(n) + (1/2) sqrt(n) - zeta(3/2)/(4 pi) + 1/(24 sqrt(n)).
/// The dropped remainder is of order n^(-5/2).
inline double sqrt_sum_ramanujan(std::int64_t n, ZetaConstants constants = {}) {
    if (n < 1)
        throw std::invalid_argument("sqrt_sum_ramanujan: n must be >= 1");
    const double rn = std::sqrt(static_cast<double>(n));
    return (2.0 / 3.0) * static_cast<double>(n) * rn + 0.5 * rn -
           constants.zeta_three_halves / (4.0 * M_PI) + 1.0 / (24.0 * rn);
}

/// 1/sqrt(1) + 1/sqrt(2) + ... + 1/sqrt(n), summed in decreasing k order
/// (smallest terms first) with compensation.
inline double inv_sqrt_sum_direct(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("inv_sqrt_sum_direct: n must be >= 1");
    KahanSum acc;
    for (std::int64_t k = n; k >= 1; --k)
        acc.add(1.0 / std::sqrt(static_cast<double>(k)));
    return acc.value();
}

/// Ramanujan's expansion of the inverse square-root sum, the three displayed
/// terms: 2 sqrt(n) + 1/(2 sqrt(n)) + zeta(1/2). Remainder of order n^(-3/2).
inline double inv_sqrt_sum_ramanujan(std::int64_t n, ZetaConstants constants = {}) {
    if (n < 1)
        throw std::invalid_argument("inv_sqrt_sum_ramanujan: n must be >= 1");
    const double rn = std::sqrt(static_cast<double>(n));
    return 2.0 * rn + 0.5 / rn + constants.zeta_half;
}

enum class ExpansionKind { sqrt_sum, inv_sqrt_sum };

/// One row of an expansion-vs-direct comparison.
struct ExpansionResult {
    std::int64_t n;
    double approximation;
    double direct;
    double abs_error;
};

namespace detail {

// The true remainder of the sqrt-sum expansion decays like n^(-5/2); by
// n = 10^4 it sits near 5e-14 while the sum itself is ~6.7e5, i.e. three
// orders of magnitude below one double ulp of the sum. The report therefore
// carries out both the direct sum and the expansion in __float128 and takes
// the difference before rounding, so abs_error measures the mathematical
// remainder rather than double rounding noise.
using wide = __float128;

inline wide wide_sqrt(wide x) {
    if (x <= 0)
        return 0;
    wide s = static_cast<wide>(std::sqrt(static_cast<double>(x)));
    s = (s + x / s) / 2; // two Newton steps from the double seed: ~1e-33 relative
    s = (s + x / s) / 2;
    return s;
}

inline wide wide_sqrt_sum_direct(std::int64_t n) {
    wide acc = 0;
    for (std::int64_t k = 1; k <= n; ++k)
        acc += wide_sqrt(static_cast<wide>(k));
    return acc;
}

inline wide wide_inv_sqrt_sum_direct(std::int64_t n) {
    wide acc = 0;
    for (std::int64_t k = n; k >= 1; --k)
        acc += 1 / wide_sqrt(static_cast<wide>(k));
    return acc;
}

inline wide wide_sqrt_sum_ramanujan(std::int64_t n, const ZetaConstants& constants) {
    const wide wn = static_cast<wide>(n);
    const wide rn = wide_sqrt(wn);
    const wide pi = static_cast<wide>(M_PI) + static_cast<wide>(1.2246467991473532e-16);
    return (wide(2) / 3) * wn * rn + rn / 2 -
           static_cast<wide>(constants.zeta_three_halves) / (4 * pi) + 1 / (24 * rn);
}

inline wide wide_inv_sqrt_sum_ramanujan(std::int64_t n, const ZetaConstants& constants) {
    const wide rn = wide_sqrt(static_cast<wide>(n));
    return 2 * rn + wide(1) / (2 * rn) + static_cast<wide>(constants.zeta_half);
}

} // namespace detail

/// Tabulate |expansion - direct sum| for each n. Both sides are evaluated in
/// extended precision internally (see detail above); the stored
/// approximation/direct fields are the values rounded to double.
inline std::vector<ExpansionResult> expansion_error_report(std::span<const std::int64_t> n_values,
                                                           ExpansionKind which,
                                                           ZetaConstants constants = {}) {
    if (n_values.empty())
        throw std::invalid_argument("expansion_error_report: n_values must be nonempty");
    for (std::size_t i = 0; i < n_values.size(); ++i)
        if (n_values[i] < 1 || (i > 0 && n_values[i] <= n_values[i - 1]))
            throw std::invalid_argument("expansion_error_report: n_values must be increasing");

    std::vector<ExpansionResult> rows;
    rows.reserve(n_values.size());
    for (const std::int64_t n : n_values) {
        detail::wide direct, approx;
        if (which == ExpansionKind::sqrt_sum) {
            direct = detail::wide_sqrt_sum_direct(n);
            approx = detail::wide_sqrt_sum_ramanujan(n, constants);
        } else {
            direct = detail::wide_inv_sqrt_sum_direct(n);
            approx = detail::wide_inv_sqrt_sum_ramanujan(n, constants);
        }
        const detail::wide diff = approx - direct;
        rows.push_back(ExpansionResult{n, static_cast<double>(approx),
                                       static_cast<double>(direct),
                                       static_cast<double>(diff < 0 ? -diff : diff)});
    }
    return rows;
}

} // namespace sqrtdx
