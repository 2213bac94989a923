#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "expression.hpp"
#include "interval.hpp"

namespace sqrtdx {

/// Dense polynomial with real coefficients, ascending powers of x.
class Polynomial {
  public:
    Polynomial() : coeffs_{0.0} {}
    Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(double c) { return Polynomial{c}; }
    static Polynomial identity() { return Polynomial{0.0, 1.0}; }
    static Polynomial monomial(int k, double coeff = 1.0) {
        std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
        c.back() = coeff;
        return Polynomial(std::move(c));
    }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

    bool is_constant() const noexcept { return coeffs_.size() == 1; }
    double constant_value() const noexcept { return coeffs_[0]; }

    double operator()(double x) const noexcept {
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * x + coeffs_[i];
        return acc;
    }

    /// Exact ordinary integral over [a, b] via the antiderivative.
    double integral(const Interval& iv) const noexcept {
        return antiderivative_at(iv.b()) - antiderivative_at(iv.a());
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            c[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            c[i] += o.coeffs_[i];
        return Polynomial(std::move(c));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (o * -1.0); }

    Polynomial operator*(const Polynomial& o) const {
        std::vector<double> c(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] += coeffs_[i] * o.coeffs_[j];
        return Polynomial(std::move(c));
    }

    Polynomial operator*(double s) const {
        std::vector<double> c = coeffs_;
        for (double& v : c)
            v *= s;
        return Polynomial(std::move(c));
    }

    Polynomial pow(unsigned exponent) const {
        Polynomial acc = constant(1.0);
        Polynomial base = *this;
        unsigned e = exponent;
        while (e > 0) {
            if (e & 1u)
                acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

  private:
    double antiderivative_at(double x) const noexcept {
        // Horner on the antiderivative Sum c_i x^{i+1}/(i+1).
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * x + coeffs_[i] / static_cast<double>(i + 1);
        return acc * x;
    }

    void normalize() {
        if (coeffs_.empty())
            coeffs_.push_back(0.0);
        while (coeffs_.size() > 1 && coeffs_.back() == 0.0)
            coeffs_.pop_back();
    }

    std::vector<double> coeffs_;
};

namespace detail {

// Structural conversion; nullopt as soon as a non-polynomial construct shows
// up (function calls, division by a non-constant, fractional or negative
// exponents). Exponents are capped to keep degrees sane.
inline std::optional<Polynomial> node_to_polynomial(const ExprNode& node) {
    constexpr double max_exponent = 64.0;
    if (const auto* num = std::get_if<NumberNode>(&node))
        return Polynomial::constant(num->value);
    if (std::holds_alternative<VariableNode>(node))
        return Polynomial::identity();
    if (const auto* neg = std::get_if<NegateNode>(&node)) {
        auto inner = node_to_polynomial(*neg->child);
        if (!inner)
            return std::nullopt;
        return *inner * -1.0;
    }
    if (const auto* call = std::get_if<CallNode>(&node)) {
        (void)call;
        return std::nullopt;
    }
    const auto& bin = std::get<BinaryNode>(node);
    auto lhs = node_to_polynomial(*bin.lhs);
    if (!lhs)
        return std::nullopt;
    auto rhs = node_to_polynomial(*bin.rhs);
    if (!rhs)
        return std::nullopt;
    switch (bin.op) {
        case BinaryOp::add: return *lhs + *rhs;
        case BinaryOp::sub: return *lhs - *rhs;
        case BinaryOp::mul: return *lhs * *rhs;
        case BinaryOp::div:
            if (!rhs->is_constant() || rhs->constant_value() == 0.0)
                return std::nullopt;
            return *lhs * (1.0 / rhs->constant_value());
        case BinaryOp::pow: {
            if (!rhs->is_constant())
                return std::nullopt;
            const double e = rhs->constant_value();
            if (e < 0.0 || e > max_exponent || e != std::floor(e))
                return std::nullopt;
            return lhs->pow(static_cast<unsigned>(e));
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Recognize expressions that denote polynomials in x (sums, products,
/// integer powers, division by constants). Returns nullopt otherwise.
inline std::optional<Polynomial> as_polynomial(const Expression& e) {
    return detail::node_to_polynomial(e.root());
}

} // namespace sqrtdx
