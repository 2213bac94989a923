// Test-side oracles and helpers. Everything here is deliberately independent
// of the library's own evaluation paths so the two routes can check each
// other.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace oracles {

// Euler-Maclaurin evaluation of zeta(s) for real s != 1:
//   zeta(s) ~= Sum_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2
//            + Sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1).
// With N = 24, J = 6 this is good to ~1e-15 for the arguments used here.
inline double euler_maclaurin_zeta(double s, int N = 24, int J = 6) {
    static const double bernoulli[] = {1.0 / 6,   -1.0 / 30,    1.0 / 42,
                                       -1.0 / 30, 5.0 / 66,     -691.0 / 2730,
                                       7.0 / 6};
    double total = 0.0;
    for (int k = N - 1; k >= 1; --k)
        total += std::pow(static_cast<double>(k), -s);
    total += std::pow(static_cast<double>(N), 1.0 - s) / (s - 1.0);
    total += 0.5 * std::pow(static_cast<double>(N), -s);
    double factorial = 1.0;
    for (int j = 1; j <= J; ++j) {
        factorial *= (2.0 * j - 1.0) * (2.0 * j);
        double pochhammer = 1.0;
        for (int i = 0; i <= 2 * j - 2; ++i)
            pochhammer *= s + static_cast<double>(i);
        total += bernoulli[j - 1] / factorial * pochhammer *
                 std::pow(static_cast<double>(N), -s - 2.0 * j + 1.0);
    }
    return total;
}

// Graded-mesh quadrature of integral_0^L s^d g(s) ds with the power-law
// singularity at s = 0: geometric panels [L 2^-(k+1), L 2^-k] resolved by
// 5-point Gauss-Legendre, plus the analytic tail g(0) delta^(d+1)/(d+1)
// below the last panel. Needs d > -1. This is the "naive singular-endpoint
// quadrature" used to cross-check the substitution-based routes.
template <typename G>
double graded_power_weight_quadrature(G&& g, double L, double d, int levels = 48,
                                      int panels_per_level = 4) {
    static const double x1 = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    static const double x2 = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    static const double nodes[5] = {-x2, -x1, 0.0, x1, x2};
    static const double weights[5] = {(322.0 - 13.0 * std::sqrt(70.0)) / 900.0,
                                      (322.0 + 13.0 * std::sqrt(70.0)) / 900.0, 128.0 / 225.0,
                                      (322.0 + 13.0 * std::sqrt(70.0)) / 900.0,
                                      (322.0 - 13.0 * std::sqrt(70.0)) / 900.0};
    double total = 0.0;
    double hi = L;
    for (int level = 0; level < levels; ++level) {
        const double lo = hi * 0.5;
        const double h = (hi - lo) / panels_per_level;
        for (int p = 0; p < panels_per_level; ++p) {
            const double mid = lo + (p + 0.5) * h;
            double panel = 0.0;
            for (int j = 0; j < 5; ++j) {
                const double s = mid + 0.5 * h * nodes[j];
                panel += weights[j] * std::pow(s, d) * g(s);
            }
            total += 0.5 * h * panel;
        }
        hi = lo;
    }
    total += g(0.0) * std::pow(hi, d + 1.0) / (d + 1.0);
    return total;
}

// integral_0^x (x-y)^d y^p dy by substitution s = x - y (so the singular
// weight sits at s = 0) and graded quadrature.
inline double beta_integral_direct(double d, double p, double x) {
    return graded_power_weight_quadrature([x, p](double s) { return std::pow(x - s, p); }, x, d);
}

// (1/Gamma(1/2)) integral_a^b (b-t)^(-1/2) f(t) dt without any smoothing
// substitution: s = b - t and graded quadrature against the s^(-1/2) weight.
template <typename F>
double half_integral_graded(F&& f, double a, double b) {
    const double sqrt_pi = std::sqrt(M_PI);
    return graded_power_weight_quadrature([&f, b](double s) { return f(b - s); }, b - a, -0.5) /
           sqrt_pi;
}

inline double factorial(int k) {
    double acc = 1.0;
    for (int i = 2; i <= k; ++i)
        acc *= static_cast<double>(i);
    return acc;
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t m = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += std::log(xs[i]);
        my += std::log(ys[i]);
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double dx = std::log(xs[i]) - mx;
        sxy += dx * (std::log(ys[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

// --- CLI process runner -----------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs `binary args...` through the shell, capturing both streams.
inline CliResult run_cli(const std::string& binary, const std::string& args) {
    static int counter = 0;
    const std::string tag = "/tmp/sqrtdx_cli_" + std::to_string(::getpid()) + "_" +
                            std::to_string(counter++);
    const std::string out_path = tag + ".out";
    const std::string err_path = tag + ".err";
    const std::string cmd = "'" + binary + "' " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

// Pulls the numeric value out of a "label   1.234" table row.
inline double table_value(const std::string& text, const std::string& label) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind(label, 0) == 0) {
            const std::size_t pos = line.find_last_of(" \t");
            return std::stod(line.substr(pos + 1));
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace oracles
