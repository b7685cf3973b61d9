#ifndef BIEXACT_BIPOLY_HPP
#define BIEXACT_BIPOLY_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "biexact/poly.hpp"
#include "biexact/ratfunc1.hpp"

namespace biexact {

/// k[x][y]: polynomial in y whose coefficients are polynomials in x.
template <Field F>
using BiPoly = Poly<Poly<F>>;

/// k(x), the coefficient field for reductions in y.
template <Field F>
using KField = RatFunc1<F>;

/// k(x)[y].
template <Field F>
using KPoly = Poly<RatFunc1<F>>;

enum class Var { X, Y };

template <Field F>
BiPoly<F> bi_constant(const F& c)
{
    return BiPoly<F>(Poly<F>(c));
}

template <Field F>
BiPoly<F> bi_x()
{
    return BiPoly<F>(Poly<F>::variable());
}

template <Field F>
BiPoly<F> bi_y()
{
    return BiPoly<F>::variable();
}

/// Polynomial in x alone viewed in k[x][y].
template <Field F>
BiPoly<F> from_x(const Poly<F>& p)
{
    return BiPoly<F>(p);
}

template <Field F>
int deg_x(const BiPoly<F>& p)
{
    int d = -1;
    for (const auto& c : p.coeffs()) {
        d = std::max(d, c.degree());
    }
    return d;
}

template <Field F>
int total_degree(const BiPoly<F>& p)
{
    int d = -1;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (!p.coeffs()[j].is_zero()) {
            d = std::max(d, static_cast<int>(j) + p.coeffs()[j].degree());
        }
    }
    return d;
}

template <Field F>
bool is_free_of_x(const BiPoly<F>& p)
{
    return deg_x(p) <= 0;
}

/// Coefficient of x^i y^j.
template <Field F>
F coeff_xy(const BiPoly<F>& p, std::size_t i, std::size_t j)
{
    return j < p.size() ? p.coeffs()[j].coeff(i) : F();
}

/// Swaps the roles of x and y.
template <Field F>
BiPoly<F> transpose(const BiPoly<F>& p)
{
    const int dx = deg_x(p);
    if (dx < 0) {
        return p;
    }
    std::vector<std::vector<F>> rows(static_cast<std::size_t>(dx + 1), std::vector<F>(p.size()));
    for (std::size_t j = 0; j < p.size(); ++j) {
        const auto& c = p.coeffs()[j].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            rows[i][j] = c[i];
        }
    }
    std::vector<Poly<F>> out;
    out.reserve(rows.size());
    for (auto& r : rows) {
        out.emplace_back(std::move(r));
    }
    return BiPoly<F>(std::move(out));
}

template <Field F>
BiPoly<F> map_x_coeffs(const BiPoly<F>& p, auto&& fn)
{
    std::vector<Poly<F>> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        out.push_back(fn(c));
    }
    return BiPoly<F>(std::move(out));
}

/// Applies fn to every scalar coefficient; fn maps F to G.
template <Field G, Field F>
BiPoly<G> map_scalars(const BiPoly<F>& p, auto&& fn)
{
    std::vector<Poly<G>> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        std::vector<G> r;
        r.reserve(c.size());
        for (const auto& a : c.coeffs()) {
            r.push_back(fn(a));
        }
        out.emplace_back(std::move(r));
    }
    return BiPoly<G>(std::move(out));
}

/// p(x + c, y).
template <Field F>
BiPoly<F> shift_x(const BiPoly<F>& p, const F& c)
{
    if (c.is_zero()) {
        return p;
    }
    return map_x_coeffs<F>(p, [&](const Poly<F>& a) { return taylor_shift(a, c); });
}

/// p(s x, y).
template <Field F>
BiPoly<F> scale_x(const BiPoly<F>& p, const F& s)
{
    if (s.is_one()) {
        return p;
    }
    return map_x_coeffs<F>(p, [&](const Poly<F>& a) { return scale_var(a, s); });
}

/// p(x, y + c).
template <Field F>
BiPoly<F> shift_y(const BiPoly<F>& p, const F& c)
{
    if (c.is_zero()) {
        return p;
    }
    return taylor_shift(p, Poly<F>(c));
}

/// p(x^m, y).
template <Field F>
BiPoly<F> expand_x(const BiPoly<F>& p, int m)
{
    return map_x_coeffs<F>(p, [&](const Poly<F>& a) {
        std::vector<F> c(a.size() == 0 ? 0 : (a.size() - 1) * static_cast<std::size_t>(m) + 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            c[i * static_cast<std::size_t>(m)] = a.coeffs()[i];
        }
        return Poly<F>(std::move(c));
    });
}

/// The polynomial r with r(x^m, y) = p, when every x-exponent is a multiple of m.
template <Field F>
std::optional<BiPoly<F>> compress_x(const BiPoly<F>& p, int m)
{
    std::vector<Poly<F>> out;
    for (const auto& a : p.coeffs()) {
        std::vector<F> c;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i % static_cast<std::size_t>(m) == 0) {
                c.push_back(a.coeffs()[i]);
            } else if (!a.coeffs()[i].is_zero()) {
                return std::nullopt;
            }
        }
        out.emplace_back(std::move(c));
    }
    return BiPoly<F>(std::move(out));
}

/// p(c, y).
template <Field F>
Poly<F> eval_x(const BiPoly<F>& p, const F& c)
{
    std::vector<F> out;
    out.reserve(p.size());
    for (const auto& a : p.coeffs()) {
        out.push_back(eval(a, c));
    }
    return Poly<F>(std::move(out));
}

template <Field F>
F eval_xy(const BiPoly<F>& p, const F& x, const F& y)
{
    return eval(eval_x(p, x), y);
}

/// Drops all terms of x-degree >= k.
template <Field F>
BiPoly<F> truncate_x(const BiPoly<F>& p, int k)
{
    return map_x_coeffs<F>(p, [&](const Poly<F>& a) {
        if (a.degree() < k) {
            return a;
        }
        std::vector<F> c(a.coeffs().begin(), a.coeffs().begin() + k);
        return Poly<F>(std::move(c));
    });
}

template <Field F>
KPoly<F> to_kpoly(const BiPoly<F>& p)
{
    std::vector<KField<F>> out;
    out.reserve(p.size());
    for (const auto& a : p.coeffs()) {
        out.emplace_back(a);
    }
    return KPoly<F>(std::move(out));
}

template <Field F>
struct ClearedKPoly {
    BiPoly<F> num;
    Poly<F> den;  // monic, lcm of the coefficient denominators
};

/// a = num / den with num in k[x][y], den in k[x].
template <Field F>
ClearedKPoly<F> clear_denominators(const KPoly<F>& a)
{
    Poly<F> l(1L);
    for (const auto& c : a.coeffs()) {
        if (c.den().degree() > 0) {
            l = exact_divide(l * c.den(), gcd(l, c.den()));
        }
    }
    std::vector<Poly<F>> out;
    out.reserve(a.size());
    for (const auto& c : a.coeffs()) {
        out.push_back(c.num() * exact_divide(l, c.den()));
    }
    return {BiPoly<F>(std::move(out)), std::move(l)};
}

/// s / c = a^(-1) mod m over k(x), from a primitive remainder sequence in
/// k[x][y] that carries the cofactor of a along.
template <Field F>
std::pair<BiPoly<F>, Poly<F>> inverse_mod_cleared(const BiPoly<F>& a, const BiPoly<F>& m)
{
    BiPoly<F> r0 = m, r1 = pseudo_divmod(a, m).second;
    BiPoly<F> s0, s1(1L);
    if (a.degree() >= m.degree()) {
        s1 = BiPoly<F>(pow(m.lc(), static_cast<unsigned>(a.degree() - m.degree() + 1)));
    }
    while (!r1.is_zero() && r1.degree() > 0) {
        const unsigned e = static_cast<unsigned>(r0.degree() - r1.degree() + 1);
        auto [q, r] = pseudo_divmod(r0, r1);
        BiPoly<F> s = s0.scaled(pow(r1.lc(), e)) - q * s1;
        Poly<F> g = gcd(content(r), content(s));
        if (g.degree() > 0) {
            r = map_x_coeffs(r, [&](const Poly<F>& c) { return exact_divide(c, g); });
            s = map_x_coeffs(s, [&](const Poly<F>& c) { return exact_divide(c, g); });
        }
        if (!r.is_zero()) {
            const F u = leading_scalar(r).inv();
            r = scale_scalar(r, u);
            s = scale_scalar(s, u);
        }
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.is_zero()) {
        throw std::logic_error("inverse_mod: not invertible");
    }
    return {std::move(s1), r1.lc()};
}

template <Field F>
KPoly<F> map_k_coeffs(const KPoly<F>& p, auto&& fn)
{
    std::vector<KField<F>> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        out.push_back(fn(c));
    }
    return KPoly<F>(std::move(out));
}

/// Factors of a polynomial over a field given as (factor, multiplicity).
template <class P>
P expand_product(const std::vector<std::pair<P, int>>& factors)
{
    P r(1L);
    for (const auto& [f, e] : factors) {
        r = r * pow(f, static_cast<unsigned>(e));
    }
    return r;
}

}  // namespace biexact

#endif
