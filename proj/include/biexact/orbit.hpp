#ifndef BIEXACT_ORBIT_HPP
#define BIEXACT_ORBIT_HPP

#include <optional>

#include "biexact/bipoly.hpp"
#include "biexact/qmode.hpp"
#include "biexact/ratfunc.hpp"

namespace biexact {

/// tau^m sigma_y^n (source) = scale * target.
template <Field F>
struct OrbitWitness {
    long m = 0;
    long n = 0;
    F scale;
};

/// Shift exponent n with sigma^n(p) = scale * p2 in the given variable.
template <Field F>
std::optional<OrbitWitness<F>> sigma_equivalent(const BiPoly<F>& p, const BiPoly<F>& p2, Var var = Var::Y)
{
    if (var == Var::X) {
        auto w = sigma_equivalent(transpose(p), transpose(p2), Var::Y);
        return w;
    }
    if (p.degree() != p2.degree() || p.is_zero() || p2.is_zero()) {
        return std::nullopt;
    }
    long n = 0;
    const int d = p.degree();
    if (d > 0) {
        // coefficient of y^(d-1) after making monic: c + d n for sigma^n
        KField<F> c1 = KField<F>(p.coeffs()[static_cast<std::size_t>(d - 1)]) / KField<F>(p.lc());
        KField<F> c2 = KField<F>(p2.coeffs()[static_cast<std::size_t>(d - 1)]) / KField<F>(p2.lc());
        KField<F> diff = (c2 - c1) / KField<F>(F(static_cast<long>(d)));
        auto k = diff.as_integer();
        if (!k) {
            return std::nullopt;
        }
        n = *k;
    }
    BiPoly<F> s = shift_y(p, F(n));
    F scale = leading_scalar(s) / leading_scalar(p2);
    if (!(s == scale_scalar(p2, scale))) {
        return std::nullopt;
    }
    return OrbitWitness<F>{0, n, scale};
}

/// Exponent m with tau^m(p) = scale * p2.
template <Field F>
std::optional<OrbitWitness<F>> q_equivalent(const BiPoly<F>& p, const BiPoly<F>& p2, const Context<F>& ctx)
{
    if (p.is_zero() || p2.is_zero() || p.size() != p2.size()) {
        return std::nullopt;
    }
    auto check = [&](long m) -> std::optional<OrbitWitness<F>> {
        BiPoly<F> s = scale_x(p, qpow(ctx, m));
        F scale = leading_scalar(s) / leading_scalar(p2);
        if (s == scale_scalar(p2, scale)) {
            return OrbitWitness<F>{m, 0, scale};
        }
        return std::nullopt;
    };
    if (ctx.root_of_unity()) {
        for (long m = 0; m < ctx.mode.order(); ++m) {
            if (auto w = check(m)) {
                return w;
            }
        }
        return std::nullopt;
    }
    // two support points with distinct x-exponents i < i2 give
    // q^(m (i2 - i)) = (a'_i2 a_i) / (a_i2 a'_i)
    std::optional<std::pair<std::size_t, std::size_t>> first;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const auto& a = p.coeffs()[j];
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.coeffs()[i].is_zero()) {
                continue;
            }
            if (!first) {
                first = {i, j};
                continue;
            }
            if (i == first->first) {
                continue;
            }
            const F a1 = coeff_xy(p, first->first, first->second);
            const F b1 = coeff_xy(p2, first->first, first->second);
            const F a2 = a.coeffs()[i];
            const F b2 = coeff_xy(p2, i, j);
            if (b1.is_zero() || b2.is_zero()) {
                return std::nullopt;
            }
            const F ratio = (b2 * a1) / (a2 * b1);
            auto e = q_log(ctx, ratio);
            const long di = static_cast<long>(i) - static_cast<long>(first->first);
            if (!e || *e % di != 0) {
                return std::nullopt;
            }
            return check(*e / di);
        }
    }
    // a single x-exponent: tau only rescales
    return check(0);
}

/// (m, n) with tau^m sigma_y^n (p) = scale * p2.
template <Field F>
std::optional<OrbitWitness<F>> joint_equivalent(const BiPoly<F>& p, const BiPoly<F>& p2, const Context<F>& ctx)
{
    if (p.is_zero() || p2.is_zero() || p.degree() != p2.degree()) {
        return std::nullopt;
    }
    // highest x-slice with positive y-degree fixes n
    const BiPoly<F> tp = transpose(p);
    const BiPoly<F> tp2 = transpose(p2);
    if (tp.size() != tp2.size()) {
        return std::nullopt;
    }
    long n = 0;
    for (std::size_t i = tp.size(); i-- > 0;) {
        const Poly<F>& a = tp.coeffs()[i];
        if (a.degree() < 1) {
            continue;
        }
        auto w = sigma_equivalent(BiPoly<F>(a), BiPoly<F>(tp2.coeffs()[i]), Var::X);
        if (!w) {
            return std::nullopt;
        }
        n = w->n;
        break;
    }
    BiPoly<F> s = shift_y(p, F(n));
    auto w = q_equivalent(s, p2, ctx);
    if (!w) {
        return std::nullopt;
    }
    w->n = n;
    return w;
}

/// phi-equivalence for phi in {sigma_x, tau_x, sigma_y}; exponent in m for
/// x-operators and in n for sigma_y.
template <Field F>
std::optional<OrbitWitness<F>> shift_equivalent(const BiPoly<F>& p, const BiPoly<F>& p2, Shift phi, const Context<F>& ctx)
{
    switch (phi) {
    case Shift::SigmaX: {
        auto w = sigma_equivalent(p, p2, Var::X);
        if (w) {
            w->m = w->n;
            w->n = 0;
        }
        return w;
    }
    case Shift::TauX:
        return q_equivalent(p, p2, ctx);
    case Shift::SigmaY:
        return sigma_equivalent(p, p2, Var::Y);
    case Shift::Identity:
        break;
    }
    F scale = leading_scalar(p) / leading_scalar(p2);
    if (p == scale_scalar(p2, scale)) {
        return OrbitWitness<F>{0, 0, scale};
    }
    return std::nullopt;
}

}  // namespace biexact

#endif
