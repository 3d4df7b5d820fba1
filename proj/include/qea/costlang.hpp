#pragma once

// Asymptotic cost expressions.
//
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := "-"? power
//   power  := atom ("^" factor)?
//   atom   := number | ident | ident "(" expr ")" | "(" expr ")"
//
// Functions: log2, ln, sqrt. Whitespace is insignificant.
//
// Two evaluators share one tree walk: plain doubles for everyday values, and
// a sign/log10-magnitude representation so problem sizes far beyond the
// double range (the solver works up to 10^400) can be costed without overflow.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>

#include "qea/errors.hpp"

namespace qea {

class UnknownFunction : public ParseError {
public:
    UnknownFunction(std::size_t offset, const std::string& name)
        : ParseError(offset, "unknown function '" + name + "'") {}
};

/// Variable bindings. Every bound value is finite and strictly positive.
class Env {
public:
    Env() = default;
    Env(std::initializer_list<std::pair<const std::string, double>> init) {
        for (const auto& [k, v] : init) set(k, v);
    }

    void set(const std::string& name, double value) {
        if (!std::isfinite(value) || !(value > 0.0))
            throw DomainError("binding for '" + name + "' must be finite and positive");
        values_[name] = value;
    }

    std::optional<double> get(std::string_view name) const {
        auto it = values_.find(std::string(name));
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(std::string_view name) const { return values_.count(std::string(name)) != 0; }

    /// Bindings of `other` take precedence.
    Env merged(const Env& other) const {
        Env out = *this;
        for (const auto& [k, v] : other.values_) out.values_[k] = v;
        return out;
    }

    const std::map<std::string, double>& values() const noexcept { return values_; }

    friend bool operator==(const Env&, const Env&) = default;

private:
    std::map<std::string, double> values_;
};

/// Real number stored as sign and log10 of the magnitude.
struct LogValue {
    int sign = 0;  ///< -1, 0 or +1
    double log10_abs = -std::numeric_limits<double>::infinity();

    static LogValue from_double(double v) {
        if (v == 0.0) return {};
        return {v > 0.0 ? 1 : -1, std::log10(std::abs(v))};
    }
    static LogValue from_log10(double lg) { return {1, lg}; }

    double to_double() const { return sign == 0 ? 0.0 : sign * std::pow(10.0, log10_abs); }
};

namespace detail {

enum class Op { number, variable, neg, add, sub, mul, div, pow, log2, ln, sqrt };

struct Node {
    Op op;
    double number = 0.0;
    std::string name;
    std::shared_ptr<const Node> a, b;
};

using NodePtr = std::shared_ptr<const Node>;

inline bool same_tree(const Node& x, const Node& y) {
    if (x.op != y.op) return false;
    switch (x.op) {
    case Op::number: return x.number == y.number;
    case Op::variable: return x.name == y.name;
    case Op::neg:
    case Op::log2:
    case Op::ln:
    case Op::sqrt: return same_tree(*x.a, *y.a);
    default: return same_tree(*x.a, *y.a) && same_tree(*x.b, *y.b);
    }
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodePtr parse() {
        auto e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr make(Op op, NodePtr a, NodePtr b = nullptr) {
        return std::make_shared<const Node>(Node{op, 0.0, {}, std::move(a), std::move(b)});
    }

    NodePtr expr() {
        auto lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = make(Op::add, lhs, term());
            else if (accept('-'))
                lhs = make(Op::sub, lhs, term());
            else
                return lhs;
        }
    }

    NodePtr term() {
        auto lhs = factor();
        for (;;) {
            if (accept('*'))
                lhs = make(Op::mul, lhs, factor());
            else if (accept('/'))
                lhs = make(Op::div, lhs, factor());
            else
                return lhs;
        }
    }

    NodePtr factor() {
        if (accept('-')) return make(Op::neg, power());
        return power();
    }

    NodePtr power() {
        auto base = atom();
        if (accept('^')) return make(Op::pow, base, factor());
        return base;
    }

    NodePtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodePtr number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_, ++n;
            return n;
        };
        std::size_t mantissa = digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) {
            pos_ = start;
            fail("malformed number");
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (digits() == 0) fail("malformed exponent");
        }
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (ec != std::errc{} || ptr != s_.data() + pos_ || !std::isfinite(v)) {
            pos_ = start;
            fail("number out of range");
        }
        return std::make_shared<const Node>(Node{Op::number, v, {}, nullptr, nullptr});
    }

    NodePtr ident() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        const std::size_t after = pos_;
        if (accept('(')) {
            Op op;
            if (name == "log2")
                op = Op::log2;
            else if (name == "ln")
                op = Op::ln;
            else if (name == "sqrt")
                op = Op::sqrt;
            else
                throw UnknownFunction(start, name);
            auto arg = expr();
            if (!accept(')')) fail("expected ')'");
            return make(op, arg);
        }
        pos_ = after;
        return std::make_shared<const Node>(Node{Op::variable, 0.0, std::move(name), nullptr, nullptr});
    }
};

inline std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline void print(const Node& n, std::string& out) {
    auto binary = [&](const char* op) {
        out += '(';
        print(*n.a, out);
        out += op;
        print(*n.b, out);
        out += ')';
    };
    auto call = [&](const char* fn) {
        out += fn;
        out += '(';
        print(*n.a, out);
        out += ')';
    };
    switch (n.op) {
    case Op::number: out += format_number(n.number); break;
    case Op::variable: out += n.name; break;
    case Op::neg:
        out += "(-";
        print(*n.a, out);
        out += ')';
        break;
    case Op::add: binary(" + "); break;
    case Op::sub: binary(" - "); break;
    case Op::mul: binary(" * "); break;
    case Op::div: binary(" / "); break;
    case Op::pow: binary(" ^ "); break;
    case Op::log2: call("log2"); break;
    case Op::ln: call("ln"); break;
    case Op::sqrt: call("sqrt"); break;
    }
}

inline void collect_variables(const Node& n, std::set<std::string>& out) {
    if (n.op == Op::variable) out.insert(n.name);
    if (n.a) collect_variables(*n.a, out);
    if (n.b) collect_variables(*n.b, out);
}

struct DoubleArith {
    using value_type = double;

    static double constant(double v) { return v; }
    static double neg(double a) { return -a; }
    static double add(double a, double b) { return a + b; }
    static double sub(double a, double b) { return a - b; }
    static double mul(double a, double b) { return a * b; }
    static double div(double a, double b) {
        if (b == 0.0) throw DomainError("division by zero");
        return a / b;
    }
    static double pow(double a, double b) {
        if (a < 0.0 && std::trunc(b) != b) throw DomainError("negative base with fractional exponent");
        if (a == 0.0 && b <= 0.0) throw DomainError("zero base with non-positive exponent");
        return std::pow(a, b);
    }
    static double log2(double a) {
        if (!(a > 0.0)) throw DomainError("log2 of non-positive argument");
        return std::log2(a);
    }
    static double ln(double a) {
        if (!(a > 0.0)) throw DomainError("ln of non-positive argument");
        return std::log(a);
    }
    static double sqrt(double a) {
        if (!(a > 0.0)) throw DomainError("sqrt of non-positive argument");
        return std::sqrt(a);
    }
    static double exponent(double a) { return a; }
};

struct LogArith {
    using value_type = LogValue;

    static LogValue constant(double v) { return LogValue::from_double(v); }
    static LogValue neg(LogValue a) { return {-a.sign, a.log10_abs}; }

    static LogValue add(LogValue a, LogValue b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        if (a.log10_abs < b.log10_abs) std::swap(a, b);
        const double d = b.log10_abs - a.log10_abs; // <= 0
        if (a.sign == b.sign) return {a.sign, a.log10_abs + std::log10(1.0 + std::pow(10.0, d))};
        if (d == 0.0) return {};
        return {a.sign, a.log10_abs + std::log10(1.0 - std::pow(10.0, d))};
    }
    static LogValue sub(LogValue a, LogValue b) { return add(a, neg(b)); }
    static LogValue mul(LogValue a, LogValue b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.sign * b.sign, a.log10_abs + b.log10_abs};
    }
    static LogValue div(LogValue a, LogValue b) {
        if (b.sign == 0) throw DomainError("division by zero");
        if (a.sign == 0) return {};
        return {a.sign * b.sign, a.log10_abs - b.log10_abs};
    }
    static LogValue pow(LogValue a, LogValue b) {
        const double e = exponent(b);
        if (a.sign == 0) {
            if (e <= 0.0) throw DomainError("zero base with non-positive exponent");
            return {};
        }
        if (a.sign < 0) {
            if (std::trunc(e) != e) throw DomainError("negative base with fractional exponent");
            const bool odd = std::fmod(std::abs(e), 2.0) == 1.0;
            return {odd ? -1 : 1, e * a.log10_abs};
        }
        if (e == 0.0) return {1, 0.0};
        return {1, e * a.log10_abs};
    }
    static LogValue log2(LogValue a) {
        if (a.sign <= 0) throw DomainError("log2 of non-positive argument");
        return LogValue::from_double(a.log10_abs / std::log10(2.0));
    }
    static LogValue ln(LogValue a) {
        if (a.sign <= 0) throw DomainError("ln of non-positive argument");
        return LogValue::from_double(a.log10_abs * std::log(10.0));
    }
    static LogValue sqrt(LogValue a) {
        if (a.sign <= 0) throw DomainError("sqrt of non-positive argument");
        return {1, a.log10_abs / 2.0};
    }
    static double exponent(LogValue a) {
        const double e = a.to_double();
        if (!std::isfinite(e)) throw DomainError("exponent overflows");
        return e;
    }
};

template <class Arith, class Lookup>
typename Arith::value_type eval(const Node& n, const Lookup& lookup) {
    switch (n.op) {
    case Op::number: return Arith::constant(n.number);
    case Op::variable: return lookup(n.name);
    case Op::neg: return Arith::neg(eval<Arith>(*n.a, lookup));
    case Op::add: return Arith::add(eval<Arith>(*n.a, lookup), eval<Arith>(*n.b, lookup));
    case Op::sub: return Arith::sub(eval<Arith>(*n.a, lookup), eval<Arith>(*n.b, lookup));
    case Op::mul: return Arith::mul(eval<Arith>(*n.a, lookup), eval<Arith>(*n.b, lookup));
    case Op::div: return Arith::div(eval<Arith>(*n.a, lookup), eval<Arith>(*n.b, lookup));
    case Op::pow: return Arith::pow(eval<Arith>(*n.a, lookup), eval<Arith>(*n.b, lookup));
    case Op::log2: return Arith::log2(eval<Arith>(*n.a, lookup));
    case Op::ln: return Arith::ln(eval<Arith>(*n.a, lookup));
    case Op::sqrt: return Arith::sqrt(eval<Arith>(*n.a, lookup));
    }
    throw InvariantViolation("unhandled expression node");
}

} // namespace detail

struct Evaluation {
    double value;
    bool overflow; ///< result left the double range; value is +/-inf
};

/// Parsed, immutable cost expression. Copies share the tree.
class CostExpr {
public:
    static CostExpr parse(std::string_view text) {
        CostExpr e;
        e.root_ = detail::Parser(text).parse();
        e.text_ = std::string(text);
        return e;
    }

    /// Source text as given to parse().
    const std::string& text() const noexcept { return text_; }

    /// Fully parenthesized canonical form; parses back to an identical tree.
    std::string to_string() const {
        std::string out;
        detail::print(*root_, out);
        return out;
    }

    std::set<std::string> variables() const {
        std::set<std::string> out;
        detail::collect_variables(*root_, out);
        return out;
    }

    Evaluation evaluate(const Env& env) const {
        auto lookup = [&](const std::string& name) {
            auto v = env.get(name);
            if (!v) throw UnboundVariable(name);
            return *v;
        };
        const double v = detail::eval<detail::DoubleArith>(*root_, lookup);
        if (std::isnan(v)) throw DomainError("indeterminate result (inf - inf)");
        return {v, std::isinf(v)};
    }

    /// Evaluates with `var` bound to 10^var_log10 (overriding env), returning
    /// the result in sign/log10 form.
    LogValue evaluate_log(const Env& env, std::string_view var, double var_log10) const {
        auto lookup = [&](const std::string& name) {
            if (name == var) return LogValue::from_log10(var_log10);
            auto v = env.get(name);
            if (!v) throw UnboundVariable(name);
            return LogValue::from_double(*v);
        };
        return detail::eval<detail::LogArith>(*root_, lookup);
    }

    /// log10 of a strictly positive cost.
    double log10_cost(const Env& env, std::string_view var, double var_log10) const {
        const LogValue v = evaluate_log(env, var, var_log10);
        if (v.sign <= 0) throw DomainError("cost '" + text_ + "' is not positive");
        return v.log10_abs;
    }

    friend bool operator==(const CostExpr& x, const CostExpr& y) {
        return detail::same_tree(*x.root_, *y.root_);
    }

private:
    CostExpr() = default;
    detail::NodePtr root_;
    std::string text_;
};

} // namespace qea
