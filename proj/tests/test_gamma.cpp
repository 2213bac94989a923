#include <catch2/catch_amalgamated.hpp>

#include <sqrtdx/gamma.hpp>

#include "oracles.hpp"

#include <cmath>
#include <random>

using sqrtdx::gamma_function;

TEST_CASE("gamma at the classic anchor points") {
    CHECK(gamma_function(0.5) == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(gamma_function(1.0) == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_function(2.0) == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_function(5.0) == Catch::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_function(1.5) == Catch::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-13));
}

TEST_CASE("gamma matches exact factorials") {
    for (int k = 1; k <= 171; ++k) {
        const double expected = oracles::factorial(k - 1);
        CHECK(gamma_function(static_cast<double>(k)) ==
              Catch::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("gamma at half integers via the double factorial identity") {
    // Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
    for (int k = 0; k <= 30; ++k) {
        const double expected = oracles::factorial(2 * k) * std::sqrt(M_PI) /
                                (std::pow(4.0, k) * oracles::factorial(k));
        CHECK(gamma_function(k + 0.5) == Catch::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("gamma tracks the standard library implementation across [0.5, 171]") {
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> x_dist(0.5, 171.0);
    for (int i = 0; i < 500; ++i) {
        const double x = x_dist(rng);
        const double ours = gamma_function(x);
        const double ref = std::tgamma(x);
        CHECK(ours == Catch::Approx(ref).epsilon(1e-12));
    }
    // Dense sweep near the small end where the recurrence shift kicks in.
    for (double x = 0.05; x < 2.0; x += 0.01)
        CHECK(gamma_function(x) == Catch::Approx(std::tgamma(x)).epsilon(1e-12));
}

TEST_CASE("gamma rejects the nonpositive axis") {
    CHECK_THROWS_AS(gamma_function(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_function(-1.0), std::domain_error);
    CHECK_THROWS_AS(gamma_function(-0.5), std::domain_error);
    CHECK_THROWS_AS(gamma_function(std::nan("")), std::domain_error);
}

TEST_CASE("gamma_value pairs argument and value") {
    const auto gv = sqrtdx::gamma_value(0.5);
    CHECK(gv.argument == 0.5);
    CHECK(gv.value == gamma_function(0.5));
}
