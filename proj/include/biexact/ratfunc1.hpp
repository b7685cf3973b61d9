#ifndef BIEXACT_RATFUNC1_HPP
#define BIEXACT_RATFUNC1_HPP

#include "biexact/fraction.hpp"
#include "biexact/rational.hpp"

namespace biexact {

/// The field F(t) of univariate rational functions over a field F. Plays two
/// roles: the parameter field Q(q) for transcendental q, and the field k(x)
/// when bivariate objects are viewed in k(x)[y].
template <Field F>
using RatFunc1 = Fraction<Poly<F>>;

/// Value at t = c (c must not be a pole).
template <Field F>
F evaluate(const RatFunc1<F>& a, const F& c)
{
    return eval(a.num(), c) / eval(a.den(), c);
}

/// a(t + c).
template <Field F>
RatFunc1<F> taylor_shift(const RatFunc1<F>& a, const F& c)
{
    if (a.is_constant()) {
        return a;
    }
    return RatFunc1<F>::coprime(taylor_shift(a.num(), c), taylor_shift(a.den(), c));
}

/// a(s t).
template <Field F>
RatFunc1<F> scale_var(const RatFunc1<F>& a, const F& s)
{
    if (a.is_constant()) {
        return a;
    }
    return RatFunc1<F>::coprime(scale_var(a.num(), s), scale_var(a.den(), s));
}

/// Monic gcd over Q(t): denominators cleared, then a gcd in Q[t][z].
inline Poly<RatFunc1<Rational>> gcd(const Poly<RatFunc1<Rational>>& a, const Poly<RatFunc1<Rational>>& b)
{
    using R = RatFunc1<Rational>;
    if (a.is_zero()) {
        return make_monic(b);
    }
    if (b.is_zero()) {
        return make_monic(a);
    }
    if (a.degree() == 0 || b.degree() == 0) {
        return Poly<R>(1L);
    }
    auto clear = [](const Poly<R>& f) {
        Poly<Rational> l(1L);
        for (const auto& c : f.coeffs()) {
            if (!c.is_zero()) {
                l = exact_divide(l * c.den(), gcd(l, c.den()));
            }
        }
        std::vector<Poly<Rational>> out;
        out.reserve(f.size());
        for (const auto& c : f.coeffs()) {
            out.push_back(c.is_zero() ? Poly<Rational>() : exact_divide(c.num() * l, c.den()));
        }
        return Poly<Poly<Rational>>(std::move(out));
    };
    const Poly<Poly<Rational>> g = gcd(clear(a), clear(b));
    std::vector<R> out;
    out.reserve(g.size());
    for (const auto& c : g.coeffs()) {
        out.emplace_back(c);
    }
    return make_monic(Poly<R>(std::move(out)));
}

}  // namespace biexact

#endif
