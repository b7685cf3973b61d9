#ifndef BIEXACT_RATFUNC_HPP
#define BIEXACT_RATFUNC_HPP

#include <string>

#include "biexact/bipoly.hpp"
#include "biexact/fraction.hpp"
#include "biexact/qmode.hpp"

namespace biexact {

/// k(x, y) as reduced fractions of k[x][y].
template <Field F>
using RatFunc = Fraction<BiPoly<F>>;

template <Field F>
RatFunc<F> rf_x()
{
    return RatFunc<F>(bi_x<F>());
}

template <Field F>
RatFunc<F> rf_y()
{
    return RatFunc<F>(bi_y<F>());
}

template <Field F>
RatFunc<F> normalize(const BiPoly<F>& num, const BiPoly<F>& den)
{
    return RatFunc<F>(num, den);
}

/// Element of k(x) viewed in k(x, y).
template <Field F>
RatFunc<F> from_k(const KField<F>& a)
{
    return RatFunc<F>::coprime(from_x(a.num()), from_x(a.den()));
}

template <Field F>
RatFunc<F> from_kpoly(const KPoly<F>& a)
{
    auto c = clear_denominators(a);
    return RatFunc<F>(std::move(c.num), from_x(c.den));
}

/// The basic commuting automorphisms of k(x, y).
enum class Shift { Identity, SigmaX, TauX, SigmaY };

std::string to_string(Shift s);

/// Action of shift^k on polynomials. TauX rescales x by q^k.
template <Field F>
BiPoly<F> act(const BiPoly<F>& p, Shift s, long k, const Context<F>& ctx)
{
    if (k == 0) {
        return p;
    }
    switch (s) {
    case Shift::Identity:
        return p;
    case Shift::SigmaX:
        return shift_x(p, F(k));
    case Shift::TauX:
        return scale_x(p, qpow(ctx, k));
    case Shift::SigmaY:
        return shift_y(p, F(k));
    }
    return p;
}

template <Field F>
KField<F> act(const KField<F>& a, Shift s, long k, const Context<F>& ctx)
{
    if (k == 0 || a.is_constant()) {
        return a;
    }
    switch (s) {
    case Shift::SigmaX:
        return taylor_shift(a, F(k));
    case Shift::TauX:
        return scale_var(a, qpow(ctx, k));
    default:
        return a;
    }
}

template <Field F>
KPoly<F> act(const KPoly<F>& p, Shift s, long k, const Context<F>& ctx)
{
    if (k == 0 || s == Shift::Identity) {
        return p;
    }
    if (s == Shift::SigmaY) {
        return taylor_shift(p, KField<F>(F(k)));
    }
    return map_k_coeffs<F>(p, [&](const KField<F>& c) { return act(c, s, k, ctx); });
}

template <Field F>
RatFunc<F> act(const RatFunc<F>& f, Shift s, long k, const Context<F>& ctx)
{
    if (k == 0 || s == Shift::Identity || f.is_constant()) {
        return f;
    }
    return RatFunc<F>::coprime(act(f.num(), s, k, ctx), act(f.den(), s, k, ctx));
}

/// phi^k(f) - f.
template <Field F>
RatFunc<F> delta(const RatFunc<F>& f, Shift s, const Context<F>& ctx, long k = 1)
{
    return act(f, s, k, ctx) - f;
}

template <Field F>
RatFunc<F> deriv_y(const RatFunc<F>& f)
{
    if (f.num().degree() <= 0 && f.den().degree() <= 0) {
        return RatFunc<F>();
    }
    const auto& n = f.num();
    const auto& d = f.den();
    return RatFunc<F>(derivative(n) * d - n * derivative(d), d * d);
}

struct OperatorSymbol {
    enum class Kind { ShiftX, QShiftX, ShiftY, DerivY, DeltaX, DeltaQX, DeltaY };
    Kind kind;
    long power = 1;
};

template <Field F>
RatFunc<F> apply(const RatFunc<F>& f, const OperatorSymbol& op, const Context<F>& ctx)
{
    using K = OperatorSymbol::Kind;
    switch (op.kind) {
    case K::ShiftX:
        return act(f, Shift::SigmaX, op.power, ctx);
    case K::QShiftX:
        ctx.qv();
        return act(f, Shift::TauX, op.power, ctx);
    case K::ShiftY:
        return act(f, Shift::SigmaY, op.power, ctx);
    case K::DerivY:
        return deriv_y(f);
    case K::DeltaX:
        return delta(f, Shift::SigmaX, ctx);
    case K::DeltaQX:
        ctx.qv();
        return delta(f, Shift::TauX, ctx);
    case K::DeltaY:
        return delta(f, Shift::SigmaY, ctx);
    }
    return f;
}

template <Field F>
RatFunc<F> transpose(const RatFunc<F>& f)
{
    return RatFunc<F>(transpose(f.num()), transpose(f.den()));
}

/// f(x^m, y).
template <Field F>
RatFunc<F> expand_x(const RatFunc<F>& f, int m)
{
    return RatFunc<F>(expand_x(f.num(), m), expand_x(f.den(), m));
}

/// r with r(x^m, y) = f; f must lie in k(y)(x^m).
template <Field F>
std::optional<RatFunc<F>> compress_x(const RatFunc<F>& f, int m)
{
    auto n = compress_x(f.num(), m);
    auto d = compress_x(f.den(), m);
    if (!n || !d) {
        return std::nullopt;
    }
    return RatFunc<F>::coprime(std::move(*n), std::move(*d));
}

}  // namespace biexact

#endif
