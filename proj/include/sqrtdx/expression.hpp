#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace sqrtdx {

/// Parse failure: `offset` is the byte position where a valid token was
/// expected, `expected` describes the acceptable continuations.
class SyntaxError : public std::runtime_error {
  public:
    SyntaxError(std::size_t offset, std::string expected)
        : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                             ": expected " + expected),
          offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

  private:
    std::size_t offset_;
    std::string expected_;
};

class UnknownFunction : public std::runtime_error {
  public:
    UnknownFunction(std::size_t offset, std::string name)
        : std::runtime_error("unknown function '" + name + "' at offset " +
                             std::to_string(offset)),
          offset_(offset), name_(std::move(name)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& name() const noexcept { return name_; }

  private:
    std::size_t offset_;
    std::string name_;
};

class UnknownVariable : public std::runtime_error {
  public:
    UnknownVariable(std::size_t offset, std::string name)
        : std::runtime_error("unknown variable '" + name + "' at offset " +
                             std::to_string(offset) + " (only 'x' is defined)"),
          offset_(offset), name_(std::move(name)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& name() const noexcept { return name_; }

  private:
    std::size_t offset_;
    std::string name_;
};

/// Raised when an expression is evaluated outside its domain (division by
/// zero, sqrt of a negative number, overflow to a non-finite value).
class EvalError : public std::runtime_error {
  public:
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

enum class BinaryOp { add, sub, mul, div, pow };
enum class FuncKind { sin, cos, exp, sqrt, abs };

namespace detail {

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct NumberNode {
    double value;
};
struct VariableNode {};
struct NegateNode {
    NodePtr child;
};
struct BinaryNode {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
};
struct CallNode {
    FuncKind func;
    NodePtr arg;
};

struct ExprNode : std::variant<NumberNode, VariableNode, NegateNode, BinaryNode, CallNode> {
    using variant::variant;
};

inline const char* func_name(FuncKind f) {
    switch (f) {
        case FuncKind::sin: return "sin";
        case FuncKind::cos: return "cos";
        case FuncKind::exp: return "exp";
        case FuncKind::sqrt: return "sqrt";
        case FuncKind::abs: return "abs";
    }
    return "?";
}

// Precedence levels used both by the parser and the printer:
// 1 = additive, 2 = multiplicative, 3 = unary minus, 4 = power, 5 = atom.
inline int precedence(const ExprNode& node) {
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, BinaryNode>) {
                switch (n.op) {
                    case BinaryOp::add:
                    case BinaryOp::sub: return 1;
                    case BinaryOp::mul:
                    case BinaryOp::div: return 2;
                    case BinaryOp::pow: return 4;
                }
                return 1;
            } else if constexpr (std::is_same_v<T, NegateNode>) {
                return 3;
            } else {
                return 5;
            }
        },
        node);
}

inline double eval_node(const ExprNode& node, double x);

inline double apply_func(FuncKind f, double v) {
    switch (f) {
        case FuncKind::sin: return std::sin(v);
        case FuncKind::cos: return std::cos(v);
        case FuncKind::exp: return std::exp(v);
        case FuncKind::sqrt:
            if (v < 0.0)
                throw EvalError("sqrt of negative value");
            return std::sqrt(v);
        case FuncKind::abs: return std::fabs(v);
    }
    throw EvalError("unreachable function kind");
}

inline double eval_node(const ExprNode& node, double x) {
    return std::visit(
        [x](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NumberNode>) {
                return n.value;
            } else if constexpr (std::is_same_v<T, VariableNode>) {
                return x;
            } else if constexpr (std::is_same_v<T, NegateNode>) {
                return -eval_node(*n.child, x);
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                const double l = eval_node(*n.lhs, x);
                const double r = eval_node(*n.rhs, x);
                double out = 0.0;
                switch (n.op) {
                    case BinaryOp::add: out = l + r; break;
                    case BinaryOp::sub: out = l - r; break;
                    case BinaryOp::mul: out = l * r; break;
                    case BinaryOp::div:
                        if (r == 0.0)
                            throw EvalError("division by zero");
                        out = l / r;
                        break;
                    case BinaryOp::pow: out = std::pow(l, r); break;
                }
                if (!std::isfinite(out))
                    throw EvalError("non-finite result in arithmetic");
                return out;
            } else {
                const double v = eval_node(*n.arg, x);
                const double out = apply_func(n.func, v);
                if (!std::isfinite(out))
                    throw EvalError("non-finite result from function call");
                return out;
            }
        },
        node);
}

inline bool equal_nodes(const ExprNode& a, const ExprNode& b) {
    if (a.index() != b.index())
        return false;
    if (const auto* na = std::get_if<NumberNode>(&a))
        return na->value == std::get<NumberNode>(b).value;
    if (std::holds_alternative<VariableNode>(a))
        return true;
    if (const auto* ga = std::get_if<NegateNode>(&a))
        return equal_nodes(*ga->child, *std::get<NegateNode>(b).child);
    if (const auto* ba = std::get_if<BinaryNode>(&a)) {
        const auto& bb = std::get<BinaryNode>(b);
        return ba->op == bb.op && equal_nodes(*ba->lhs, *bb.lhs) && equal_nodes(*ba->rhs, *bb.rhs);
    }
    const auto& ca = std::get<CallNode>(a);
    const auto& cb = std::get<CallNode>(b);
    return ca.func == cb.func && equal_nodes(*ca.arg, *cb.arg);
}

inline std::string format_number(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

inline void print_node(const ExprNode& node, std::string& out);

inline void print_child(const ExprNode& child, int min_prec, std::string& out) {
    if (precedence(child) < min_prec) {
        out += '(';
        print_node(child, out);
        out += ')';
    } else {
        print_node(child, out);
    }
}

inline void print_node(const ExprNode& node, std::string& out) {
    std::visit(
        [&out](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NumberNode>) {
                out += format_number(n.value);
            } else if constexpr (std::is_same_v<T, VariableNode>) {
                out += 'x';
            } else if constexpr (std::is_same_v<T, NegateNode>) {
                out += '-';
                print_child(*n.child, 3, out);
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                // Left-associative operators reproduce their own precedence on
                // the left and demand strictly higher on the right; '^' is the
                // mirror image (right-associative, atom on the left).
                switch (n.op) {
                    case BinaryOp::add:
                        print_child(*n.lhs, 1, out);
                        out += '+';
                        print_child(*n.rhs, 2, out);
                        break;
                    case BinaryOp::sub:
                        print_child(*n.lhs, 1, out);
                        out += '-';
                        print_child(*n.rhs, 2, out);
                        break;
                    case BinaryOp::mul:
                        print_child(*n.lhs, 2, out);
                        out += '*';
                        print_child(*n.rhs, 3, out);
                        break;
                    case BinaryOp::div:
                        print_child(*n.lhs, 2, out);
                        out += '/';
                        print_child(*n.rhs, 3, out);
                        break;
                    case BinaryOp::pow:
                        print_child(*n.lhs, 5, out);
                        out += '^';
                        print_child(*n.rhs, 3, out);
                        break;
                }
            } else {
                out += func_name(n.func);
                out += '(';
                print_node(*n.arg, out);
                out += ')';
            }
        },
        node);
}

} // namespace detail

/// Immutable parsed expression in one variable `x`.
///
/// Grammar (whitespace insignificant):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' factor)?
///   atom   := NUMBER | 'x' | IDENT '(' expr ')' | '(' expr ')'
/// `^` binds tighter than unary minus and is right-associative. Functions:
/// sin, cos, exp, sqrt, abs.
class Expression {
  public:
    /// Evaluate at x; throws EvalError when a subexpression is undefined.
    double operator()(double x) const { return detail::eval_node(*root_, x); }

    /// Canonical text form; parsing it yields a structurally identical tree.
    std::string str() const {
        std::string out;
        detail::print_node(*root_, out);
        return out;
    }

    bool operator==(const Expression& other) const {
        return detail::equal_nodes(*root_, *other.root_);
    }
    bool operator!=(const Expression& other) const { return !(*this == other); }

    // Tree constructors (used by generators and by algebra on coefficients).
    static Expression number(double v) {
        return Expression(std::make_shared<detail::ExprNode>(detail::NumberNode{v}));
    }
    static Expression variable() {
        return Expression(std::make_shared<detail::ExprNode>(detail::VariableNode{}));
    }
    static Expression negate(Expression e) {
        return Expression(
            std::make_shared<detail::ExprNode>(detail::NegateNode{std::move(e.root_)}));
    }
    static Expression binary(BinaryOp op, Expression l, Expression r) {
        return Expression(std::make_shared<detail::ExprNode>(
            detail::BinaryNode{op, std::move(l.root_), std::move(r.root_)}));
    }
    static Expression call(FuncKind f, Expression arg) {
        return Expression(
            std::make_shared<detail::ExprNode>(detail::CallNode{f, std::move(arg.root_)}));
    }

    friend Expression operator+(Expression l, Expression r) {
        return binary(BinaryOp::add, std::move(l), std::move(r));
    }
    friend Expression operator*(Expression l, Expression r) {
        return binary(BinaryOp::mul, std::move(l), std::move(r));
    }

    const detail::ExprNode& root() const noexcept { return *root_; }

  private:
    explicit Expression(detail::NodePtr root) : root_(std::move(root)) {}

    detail::NodePtr root_;

    friend Expression parse_expression(std::string_view source); // defined below
};

namespace detail {

enum class TokenKind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    TokenKind kind;
    std::size_t offset;
    double number = 0.0;
    std::string_view text;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& current() const noexcept { return tok_; }

    void advance() {
        while (pos_ < src_.size() && is_space(src_[pos_]))
            ++pos_;
        tok_.offset = pos_;
        if (pos_ >= src_.size()) {
            tok_.kind = TokenKind::end;
            return;
        }
        const char c = src_[pos_];
        switch (c) {
            case '+': tok_.kind = TokenKind::plus; ++pos_; return;
            case '-': tok_.kind = TokenKind::minus; ++pos_; return;
            case '*': tok_.kind = TokenKind::star; ++pos_; return;
            case '/': tok_.kind = TokenKind::slash; ++pos_; return;
            case '^': tok_.kind = TokenKind::caret; ++pos_; return;
            case '(': tok_.kind = TokenKind::lparen; ++pos_; return;
            case ')': tok_.kind = TokenKind::rparen; ++pos_; return;
            default: break;
        }
        if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
            lex_number();
            return;
        }
        if (is_ident_start(c)) {
            std::size_t end = pos_;
            while (end < src_.size() && is_ident_char(src_[end]))
                ++end;
            tok_.kind = TokenKind::ident;
            tok_.text = src_.substr(pos_, end - pos_);
            pos_ = end;
            return;
        }
        throw SyntaxError(pos_, "a number, 'x', a function call, or '('");
    }

  private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

    // NUMBER := digits ['.' digits?] [('e'|'E') [sign] digits]
    //         | '.' digits [('e'|'E') [sign] digits]
    // A trailing 'e' without digits is not part of the number (strtod rule).
    void lex_number() {
        std::size_t end = pos_;
        while (end < src_.size() && is_digit(src_[end]))
            ++end;
        if (end < src_.size() && src_[end] == '.') {
            ++end;
            while (end < src_.size() && is_digit(src_[end]))
                ++end;
        }
        if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
            std::size_t exp = end + 1;
            if (exp < src_.size() && (src_[exp] == '+' || src_[exp] == '-'))
                ++exp;
            if (exp < src_.size() && is_digit(src_[exp])) {
                ++exp;
                while (exp < src_.size() && is_digit(src_[exp]))
                    ++exp;
                end = exp;
            }
        }
        const std::string slice(src_.substr(pos_, end - pos_));
        double value = 0.0;
        const auto res = std::from_chars(slice.data(), slice.data() + slice.size(), value);
        if (res.ec != std::errc{} || res.ptr != slice.data() + slice.size())
            throw SyntaxError(pos_, "a valid numeric literal");
        tok_.kind = TokenKind::number;
        tok_.number = value;
        tok_.text = src_.substr(pos_, end - pos_);
        pos_ = end;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token tok_{};
};

class Parser {
  public:
    explicit Parser(std::string_view src) : lexer_(src) {}

    NodePtr parse() {
        NodePtr e = parse_expr();
        if (lexer_.current().kind != TokenKind::end)
            throw SyntaxError(lexer_.current().offset, "an operator or end of input");
        return e;
    }

  private:
    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            const TokenKind k = lexer_.current().kind;
            if (k != TokenKind::plus && k != TokenKind::minus)
                return lhs;
            lexer_.advance();
            NodePtr rhs = parse_term();
            lhs = std::make_shared<ExprNode>(BinaryNode{
                k == TokenKind::plus ? BinaryOp::add : BinaryOp::sub, std::move(lhs),
                std::move(rhs)});
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        for (;;) {
            const TokenKind k = lexer_.current().kind;
            if (k != TokenKind::star && k != TokenKind::slash)
                return lhs;
            lexer_.advance();
            NodePtr rhs = parse_factor();
            lhs = std::make_shared<ExprNode>(BinaryNode{
                k == TokenKind::star ? BinaryOp::mul : BinaryOp::div, std::move(lhs),
                std::move(rhs)});
        }
    }

    NodePtr parse_factor() {
        if (lexer_.current().kind == TokenKind::minus) {
            lexer_.advance();
            return std::make_shared<ExprNode>(NegateNode{parse_factor()});
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (lexer_.current().kind == TokenKind::caret) {
            lexer_.advance();
            NodePtr exponent = parse_factor(); // right-associative
            return std::make_shared<ExprNode>(
                BinaryNode{BinaryOp::pow, std::move(base), std::move(exponent)});
        }
        return base;
    }

    NodePtr parse_atom() {
        const Token tok = lexer_.current();
        switch (tok.kind) {
            case TokenKind::number:
                lexer_.advance();
                return std::make_shared<ExprNode>(NumberNode{tok.number});
            case TokenKind::lparen: {
                lexer_.advance();
                NodePtr inner = parse_expr();
                if (lexer_.current().kind != TokenKind::rparen)
                    throw SyntaxError(lexer_.current().offset, "')'");
                lexer_.advance();
                return inner;
            }
            case TokenKind::ident: return parse_ident(tok);
            default:
                throw SyntaxError(tok.offset, "a number, 'x', a function call, or '('");
        }
    }

    static bool known_function(std::string_view name, FuncKind& out) {
        if (name == "sin")
            out = FuncKind::sin;
        else if (name == "cos")
            out = FuncKind::cos;
        else if (name == "exp")
            out = FuncKind::exp;
        else if (name == "sqrt")
            out = FuncKind::sqrt;
        else if (name == "abs")
            out = FuncKind::abs;
        else
            return false;
        return true;
    }

    NodePtr parse_ident(const Token& tok) {
        lexer_.advance();
        FuncKind func{};
        const bool is_function = known_function(tok.text, func);
        if (lexer_.current().kind == TokenKind::lparen) {
            if (!is_function)
                throw UnknownFunction(tok.offset, std::string(tok.text));
            lexer_.advance();
            NodePtr arg = parse_expr();
            if (lexer_.current().kind != TokenKind::rparen)
                throw SyntaxError(lexer_.current().offset, "')'");
            lexer_.advance();
            return std::make_shared<ExprNode>(CallNode{func, std::move(arg)});
        }
        if (is_function)
            throw SyntaxError(lexer_.current().offset, "'(' after function name");
        if (tok.text == "x")
            return std::make_shared<ExprNode>(VariableNode{});
        throw UnknownVariable(tok.offset, std::string(tok.text));
    }

    Lexer lexer_;
};

} // namespace detail

/// Parse an integrand in the variable x. Throws SyntaxError, UnknownFunction
/// or UnknownVariable with the byte offset of the failure.
inline Expression parse_expression(std::string_view source) {
    if (source.empty())
        throw SyntaxError(0, "a nonempty expression");
    detail::Parser parser(source);
    return Expression(parser.parse());
}

} // namespace sqrtdx
