#ifndef BIEXACT_EXPR_HPP
#define BIEXACT_EXPR_HPP

#include <gmpxx.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "biexact/qmode.hpp"
#include "biexact/ratfunc.hpp"

namespace biexact {

/// Parse failure at a 1-based line and column.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(int line, int column, std::set<std::string> expected, const std::string& found);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::set<std::string>& expected() const { return expected_; }

private:
    int line_;
    int column_;
    std::set<std::string> expected_;
};

struct Expr {
    enum class Kind { Integer, Variable, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind = Kind::Integer;
    mpz_class value;     // Integer
    char name = 0;       // Variable: x, y or q
    long exponent = 0;   // Pow
    std::vector<Expr> args;
};

/// additive < multiplicative < unary minus < power (right-assoc) < atom.
Expr parse(const std::string& text);

/// Debug form, e.g. Div(1, Mul(x, y)).
std::string to_string(const Expr& e);

namespace detail {

template <Field F>
RatFunc<F> elaborate_q(const Context<F>& ctx)
{
    if (!ctx.q) {
        throw QModeMismatch("the expression uses q but no q-mode was given");
    }
    return RatFunc<F>(bi_constant<F>(ctx.qv()));
}

}  // namespace detail

/// The rational function denoted by e, with q read in the context.
template <Field F>
RatFunc<F> elaborate(const Expr& e, const Context<F>& ctx)
{
    switch (e.kind) {
    case Expr::Kind::Integer:
        return RatFunc<F>(bi_constant<F>(F(Rational(e.value))));
    case Expr::Kind::Variable:
        if (e.name == 'x') {
            return rf_x<F>();
        }
        if (e.name == 'y') {
            return rf_y<F>();
        }
        return detail::elaborate_q(ctx);
    case Expr::Kind::Add:
        return elaborate(e.args[0], ctx) + elaborate(e.args[1], ctx);
    case Expr::Kind::Sub:
        return elaborate(e.args[0], ctx) - elaborate(e.args[1], ctx);
    case Expr::Kind::Mul:
        return elaborate(e.args[0], ctx) * elaborate(e.args[1], ctx);
    case Expr::Kind::Div: {
        RatFunc<F> d = elaborate(e.args[1], ctx);
        if (d.is_zero()) {
            throw ZeroDenominator();
        }
        return elaborate(e.args[0], ctx) / d;
    }
    case Expr::Kind::Neg:
        return -elaborate(e.args[0], ctx);
    case Expr::Kind::Pow: {
        RatFunc<F> b = elaborate(e.args[0], ctx);
        if (e.exponent < 0) {
            if (b.is_zero()) {
                throw ZeroDenominator();
            }
            b = b.inv();
        }
        RatFunc<F> r(1L);
        for (unsigned long k = static_cast<unsigned long>(e.exponent < 0 ? -e.exponent : e.exponent); k > 0; k >>= 1U) {
            if (k & 1U) {
                r = r * b;
            }
            if (k > 1) {
                b = b * b;
            }
        }
        return r;
    }
    }
    throw std::logic_error("bad expression node");
}

template <Field F>
RatFunc<F> parse_ratfunc(const std::string& text, const Context<F>& ctx)
{
    return elaborate(parse(text), ctx);
}

}  // namespace biexact

#endif
