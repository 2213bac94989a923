#include <catch2/catch_amalgamated.hpp>

#include <sqrtdx/ramanujan.hpp>

#include "oracles.hpp"

#include <cmath>
#include <vector>

using namespace sqrtdx;

TEST_CASE("pinned zeta constants match an Euler-Maclaurin oracle") {
    const ZetaConstants zc;
    CHECK(zc.zeta_three_halves ==
          Catch::Approx(oracles::euler_maclaurin_zeta(1.5)).margin(1e-9));
    CHECK(zc.zeta_half == Catch::Approx(oracles::euler_maclaurin_zeta(0.5)).margin(1e-9));
    // The oracle itself is much better than the contract tolerance.
    CHECK(zc.zeta_three_halves ==
          Catch::Approx(oracles::euler_maclaurin_zeta(1.5)).margin(1e-13));
    CHECK(zc.zeta_half == Catch::Approx(oracles::euler_maclaurin_zeta(0.5)).margin(1e-13));
}

TEST_CASE("direct square root sums") {
    CHECK(sqrt_sum_direct(1) == 1.0);
    CHECK(sqrt_sum_direct(3) == Catch::Approx(4.146264369941973).margin(1e-13));
    CHECK(sqrt_sum_direct(4) == Catch::Approx(6.146264369941973).margin(1e-13));
    CHECK_THROWS_AS(sqrt_sum_direct(0), std::invalid_argument);
}

TEST_CASE("direct inverse square root sums") {
    CHECK(inv_sqrt_sum_direct(1) == 1.0);
    CHECK(inv_sqrt_sum_direct(2) == Catch::Approx(1.7071067811865475).margin(1e-14));
    CHECK(inv_sqrt_sum_direct(4) == Catch::Approx(2.784457050376173).margin(1e-14));
    CHECK_THROWS_AS(inv_sqrt_sum_direct(0), std::invalid_argument);
}

TEST_CASE("direct sums are strictly increasing") {
    double prev_sqrt = 0.0;
    double prev_inv = 0.0;
    for (std::int64_t n = 1; n <= 200; ++n) {
        const double s = sqrt_sum_direct(n);
        const double i = inv_sqrt_sum_direct(n);
        CHECK(s > prev_sqrt);
        CHECK(i > prev_inv);
        prev_sqrt = s;
        prev_inv = i;
    }
}

TEST_CASE("adjacent direct sums differ by sqrt(n)") {
    // With compensated summation the identity holds to 1e-12 while the sums
    // are small enough for that figure to be representable; for large n the
    // check degrades gracefully to a few ulps of the sum itself, which is the
    // best any double-valued sum can promise.
    for (std::int64_t n = 2; n <= 200; ++n) {
        const double diff = sqrt_sum_direct(n) - sqrt_sum_direct(n - 1);
        CHECK(diff == Catch::Approx(std::sqrt(static_cast<double>(n))).margin(1e-12));
    }
    for (const std::int64_t n : {1000LL, 100000LL, 1000000LL}) {
        const double sum = sqrt_sum_direct(n);
        const double diff = sum - sqrt_sum_direct(n - 1);
        const double ulp = std::nextafter(sum, 2.0 * sum) - sum;
        CHECK(diff ==
              Catch::Approx(std::sqrt(static_cast<double>(n))).margin(4.0 * ulp + 1e-12));
    }
}

TEST_CASE("sqrt-sum expansion accuracy") {
    CHECK(std::fabs(sqrt_sum_ramanujan(100) - sqrt_sum_direct(100)) <= 1e-7);
    CHECK(sqrt_sum_ramanujan(1) == Catch::Approx(1.0004471083559787).margin(1e-12));
    CHECK(std::fabs(sqrt_sum_ramanujan(1) - 1.0) <= 2e-3);

    // At n = 10^4 the remainder (~5.2e-14) sits below one ulp of the sum, so
    // the check goes through the extended-precision report.
    const std::vector<std::int64_t> ns{10000};
    const auto rows = expansion_error_report(ns, ExpansionKind::sqrt_sum);
    CHECK(rows[0].abs_error <= 1e-10);
    CHECK(rows[0].abs_error >= 1e-15); // the remainder is real, not rounding
}

TEST_CASE("inverse-sqrt-sum expansion accuracy") {
    CHECK(std::fabs(inv_sqrt_sum_ramanujan(10000) - inv_sqrt_sum_direct(10000)) <= 1e-6);
    CHECK(std::fabs(inv_sqrt_sum_ramanujan(100) - inv_sqrt_sum_direct(100)) <= 1e-4);
    CHECK(inv_sqrt_sum_ramanujan(1) == Catch::Approx(1.0396454911904132).margin(1e-12));
    CHECK(std::fabs(inv_sqrt_sum_ramanujan(1) - 1.0) <= 0.05);
}

TEST_CASE("expansion error report") {
    const std::vector<std::int64_t> ns{10, 100, 1000};
    const auto rows = expansion_error_report(ns, ExpansionKind::sqrt_sum);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].abs_error > rows[1].abs_error);
    CHECK(rows[1].abs_error > rows[2].abs_error);
    for (const auto& row : rows) {
        CHECK(row.abs_error >= 0.0);
        // The rounded fields stay consistent with the double-path operations.
        CHECK(row.direct ==
              Catch::Approx(sqrt_sum_direct(row.n)).epsilon(1e-14));
        CHECK(row.approximation ==
              Catch::Approx(sqrt_sum_ramanujan(row.n)).epsilon(1e-14));
    }

    const std::vector<std::int64_t> ns2{10, 100};
    const auto inv_rows = expansion_error_report(ns2, ExpansionKind::inv_sqrt_sum);
    CHECK(inv_rows[1].abs_error < inv_rows[0].abs_error);

    const std::vector<std::int64_t> ns3{1};
    const auto single = expansion_error_report(ns3, ExpansionKind::sqrt_sum);
    REQUIRE(single.size() == 1);
    CHECK(single[0].abs_error < 2e-3);

    CHECK_THROWS_AS(expansion_error_report({}, ExpansionKind::sqrt_sum),
                    std::invalid_argument);
    const std::vector<std::int64_t> unsorted{100, 10};
    CHECK_THROWS_AS(expansion_error_report(unsorted, ExpansionKind::sqrt_sum),
                    std::invalid_argument);
}

TEST_CASE("error decay slopes match the remainder orders") {
    const std::vector<std::int64_t> ns{100, 1000, 10000};

    const auto sqrt_rows = expansion_error_report(ns, ExpansionKind::sqrt_sum);
    std::vector<double> xs, ys;
    for (const auto& r : sqrt_rows) {
        xs.push_back(static_cast<double>(r.n));
        ys.push_back(r.abs_error);
    }
    const double sqrt_slope = oracles::loglog_slope(xs, ys);
    CHECK(sqrt_slope > -2.7);
    CHECK(sqrt_slope < -2.3);

    const auto inv_rows = expansion_error_report(ns, ExpansionKind::inv_sqrt_sum);
    xs.clear();
    ys.clear();
    for (const auto& r : inv_rows) {
        xs.push_back(static_cast<double>(r.n));
        ys.push_back(r.abs_error);
    }
    const double inv_slope = oracles::loglog_slope(xs, ys);
    CHECK(inv_slope > -1.7);
    CHECK(inv_slope < -1.3);
}
