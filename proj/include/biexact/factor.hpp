#ifndef BIEXACT_FACTOR_HPP
#define BIEXACT_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "biexact/bipoly.hpp"
#include "biexact/cyclotomic.hpp"
#include "biexact/errors.hpp"
#include "biexact/printer.hpp"
#include "biexact/qmode.hpp"
#include "biexact/zassenhaus.hpp"

namespace biexact {

inline constexpr std::uint64_t default_factor_seed = 0x5eed5eedULL;
inline constexpr int factor_retry_budget = 5;

template <Field F>
struct Factorization {
    F unit;
    std::vector<std::pair<BiPoly<F>, int>> factors;

    BiPoly<F> expand() const
    {
        BiPoly<F> r = bi_constant(unit);
        for (const auto& [f, e] : factors) {
            r = r * pow(f, static_cast<unsigned>(e));
        }
        return r;
    }
};

/// (content, primitive) with p = content * primitive. For var = Y the content
/// lies in k[x]; for var = X it lies in k[y]. The primitive part is normalized.
template <Field F>
std::pair<BiPoly<F>, BiPoly<F>> content_primitive(const BiPoly<F>& p, Var var)
{
    if (p.is_zero()) {
        throw ZeroPolynomial();
    }
    if (var == Var::X) {
        auto [c, pp] = content_primitive(transpose(p), Var::Y);
        return {transpose(c), transpose(pp)};
    }
    Poly<F> c = content(p);
    BiPoly<F> pp = make_monic(p);
    if (c.degree() > 0) {
        std::vector<Poly<F>> q;
        for (const auto& a : pp.coeffs()) {
            q.push_back(exact_divide(a, c));
        }
        pp = BiPoly<F>(std::move(q));
    }
    // content carries the scalar so that the product is exact
    BiPoly<F> cb = from_x(c);
    auto s = try_divide(p, cb * pp);
    return {cb * *s, pp};
}

// ---------------------------------------------------------------------------
// Univariate factorization over the supported fields.

template <Field F>
std::vector<Poly<F>> factor_squarefree_univariate(const Poly<F>& f, const Context<F>& ctx, std::uint64_t seed);

template <Field F>
Factorization<F> factor(const BiPoly<F>& p, const Context<F>& ctx, std::uint64_t seed = default_factor_seed);

/// Monic irreducible factors with multiplicities; f = lc(f) prod.
template <Field F>
std::vector<std::pair<Poly<F>, int>> factor_univariate(const Poly<F>& f, const Context<F>& ctx,
                                                       std::uint64_t seed = default_factor_seed)
{
    if (f.is_zero()) {
        throw ZeroPolynomial();
    }
    std::vector<std::pair<Poly<F>, int>> out;
    for (const auto& s : squarefree_decomposition(f)) {
        for (auto& g : factor_squarefree_univariate(s.factor, ctx, seed)) {
            out.emplace_back(std::move(g), s.multiplicity);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    return out;
}

namespace detail {

inline std::vector<Poly<Rational>> factor_sqf(const Poly<Rational>& f, const Context<Rational>&, std::uint64_t)
{
    if (f.degree() <= 1) {
        return {make_monic(f)};
    }
    return factor_squarefree_rational(f);
}

// Trager: factor the norm of f(t - s zeta) over Q and pull back by gcds.
inline std::vector<Poly<Cyclotomic>> factor_sqf(const Poly<Cyclotomic>& f, const Context<Cyclotomic>& field,
                                               std::uint64_t)
{
    using P = Poly<Cyclotomic>;
    if (f.degree() <= 1) {
        return {make_monic(f)};
    }
    std::shared_ptr<const CyclotomicContext> ctx = field.qv().context();
    auto to_rational = [](const P& p) {
        std::vector<Rational> c;
        for (const auto& a : p.coeffs()) {
            if (!a.is_rational()) {
                return std::optional<Poly<Rational>>();
            }
            c.push_back(a.rep().coeff(0));
        }
        return std::optional<Poly<Rational>>(Poly<Rational>(std::move(c)));
    };
    auto from_rational = [](const Poly<Rational>& p) {
        std::vector<Cyclotomic> c;
        for (const auto& a : p.coeffs()) {
            c.emplace_back(a);
        }
        return P(std::move(c));
    };
    if (!ctx || ctx->degree == 1) {
        auto r = to_rational(f);
        std::vector<P> out;
        for (const auto& g : factor_squarefree_rational(*r)) {
            out.push_back(from_rational(g));
        }
        return out;
    }
    const Cyclotomic zeta = Cyclotomic::generator(ctx);
    for (long s = 0;; s = s <= 0 ? 1 - s : -s) {
        Cyclotomic shift = zeta * Cyclotomic(s);
        P g = taylor_shift(f, -shift);
        P norm(1L);
        for (int k = 1; k < ctx->order; ++k) {
            if (std::gcd(k, ctx->order) != 1) {
                continue;
            }
            std::vector<Cyclotomic> c;
            for (const auto& a : g.coeffs()) {
                c.push_back(a.galois(k));
            }
            norm = norm * P(std::move(c));
        }
        if (ctx->order == 1) {
            norm = g;
        }
        auto nr = to_rational(norm);
        if (!nr || !is_squarefree(*nr)) {
            continue;
        }
        std::vector<P> out;
        for (const auto& h : factor_squarefree_rational(*nr)) {
            P gi = gcd(g, from_rational(h));
            out.push_back(make_monic(taylor_shift(gi, shift)));
        }
        return out;
    }
}

inline std::vector<Poly<RatFunc1<Rational>>> factor_sqf(const Poly<RatFunc1<Rational>>& f,
                                                        const Context<RatFunc1<Rational>>&, std::uint64_t seed)
{
    using G = Rational;
    if (f.degree() <= 1) {
        return {make_monic(f)};
    }
    // y outer, the parameter inner: a bivariate problem over G
    BiPoly<G> cleared = clear_denominators<G>(f).num;
    std::vector<Poly<RatFunc1<G>>> out;
    for (const auto& [g, e] : factor<G>(cleared, Context<G>{}, seed).factors) {
        if (g.degree() > 0) {
            out.push_back(make_monic(to_kpoly<G>(g)));
        }
    }
    return out;
}

template <Field F>
BiPoly<F> coeff_x_slice(const BiPoly<F>& p, int k)
{
    std::vector<Poly<F>> out;
    for (const auto& a : p.coeffs()) {
        out.emplace_back(a.coeff(static_cast<std::size_t>(k)));
    }
    return BiPoly<F>(std::move(out));
}

template <Field F>
Poly<F> slice_in_y(const BiPoly<F>& p, int k)
{
    std::vector<F> out;
    for (const auto& a : p.coeffs()) {
        out.push_back(a.coeff(static_cast<std::size_t>(k)));
    }
    return Poly<F>(std::move(out));
}

template <Field F>
BiPoly<F> y_poly_times_xk(const Poly<F>& p, int k)
{
    std::vector<Poly<F>> out;
    for (const auto& a : p.coeffs()) {
        out.push_back(Poly<F>::monomial(a, static_cast<std::size_t>(k)));
    }
    return BiPoly<F>(std::move(out));
}

template <Field F>
BiPoly<F> mul_trunc(const BiPoly<F>& a, const BiPoly<F>& b, int prec)
{
    return truncate_x(a * b, prec);
}

/// 1/a mod x^prec; a(0) != 0.
template <Field F>
Poly<F> series_inverse(const Poly<F>& a, int prec)
{
    std::vector<F> r(static_cast<std::size_t>(prec));
    const F c0 = a.coeff(0).inv();
    r[0] = c0;
    for (int k = 1; k < prec; ++k) {
        F acc;
        for (int i = 1; i <= k && i <= a.degree(); ++i) {
            acc += a.coeffs()[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
        }
        r[static_cast<std::size_t>(k)] = -(acc * c0);
    }
    return Poly<F>(std::move(r));
}

/// Lifts monic coprime factors u_i of P(0, y)/lc to P/lc = prod f_i mod x^prec.
template <Field F>
std::vector<BiPoly<F>> hensel_lift(const BiPoly<F>& monic_series, const std::vector<Poly<F>>& u, int prec)
{
    const std::size_t r = u.size();
    std::vector<Poly<F>> s(r);
    Poly<F> all(1L);
    for (const auto& x : u) {
        all = all * x;
    }
    for (std::size_t i = 0; i < r; ++i) {
        s[i] = inverse_mod(exact_divide(all, u[i]), u[i]);
    }
    std::vector<BiPoly<F>> f;
    for (const auto& x : u) {
        f.push_back(y_poly_times_xk(x, 0));
    }
    for (int k = 1; k < prec; ++k) {
        BiPoly<F> prod(1L);
        for (const auto& x : f) {
            prod = mul_trunc(prod, x, k + 1);
        }
        Poly<F> e = slice_in_y(monic_series - prod, k);
        if (e.is_zero()) {
            continue;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Poly<F> d = divmod(e * s[i], u[i]).second;
            f[i] = f[i] + y_poly_times_xk(d, k);
        }
    }
    return f;
}

template <Field F>
bool for_each_subset(std::size_t n, std::size_t k, auto&& fn)
{
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    for (;;) {
        if (fn(idx)) {
            return true;
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return false;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Primitive part with respect to y, normalized.
template <Field F>
BiPoly<F> y_primitive(const BiPoly<F>& p)
{
    return content_primitive(p, Var::Y).second;
}

/// Irreducible factors of a primitive, squarefree P of positive y-degree.
template <Field F>
std::vector<BiPoly<F>> factor_primitive_squarefree(const BiPoly<F>& P, const Context<F>& ctx, std::uint64_t seed)
{
    if (P.degree() == 1) {
        return {make_monic(P)};
    }
    if (deg_x(P) == 0) {
        Poly<F> u = slice_in_y(P, 0);
        std::vector<BiPoly<F>> out;
        for (const auto& g : factor_squarefree_univariate(u, ctx, seed)) {
            out.push_back(y_poly_times_xk(g, 0));
        }
        return out;
    }
    std::mt19937_64 rng(seed);
    long range = 2;
    for (int attempt = 0; attempt < 64 * factor_retry_budget; ++attempt) {
        std::uniform_int_distribution<long> dist(-range, range);
        if (attempt % 8 == 7) {
            range *= 2;
        }
        const F x0 = F(attempt == 0 ? 0L : dist(rng));
        BiPoly<F> Q = shift_x(P, x0);
        const Poly<F>& lc = Q.lc();
        if (lc.coeff(0).is_zero()) {
            continue;
        }
        Poly<F> image = slice_in_y(Q, 0);
        if (!is_squarefree(image)) {
            continue;
        }
        std::vector<Poly<F>> u = factor_squarefree_univariate(image, ctx, rng());
        if (u.size() == 1) {
            return {make_monic(P)};
        }
        const int prec = deg_x(Q) + 1;
        BiPoly<F> monic_series = truncate_x(Q * from_x(series_inverse(lc, prec)), prec);
        std::vector<BiPoly<F>> lifted = hensel_lift(monic_series, u, prec);

        std::vector<BiPoly<F>> found;
        BiPoly<F> rest = Q;
        std::size_t k = 1;
        while (2 * k <= lifted.size()) {
            const bool hit = for_each_subset<F>(lifted.size(), k, [&](const std::vector<std::size_t>& idx) {
                BiPoly<F> g = from_x(rest.lc());
                for (std::size_t i : idx) {
                    g = mul_trunc(g, lifted[i], prec);
                }
                g = y_primitive(g);
                auto q = try_divide(rest, g);
                if (!q) {
                    return false;
                }
                found.push_back(g);
                rest = *q;
                std::vector<BiPoly<F>> remaining;
                for (std::size_t i = 0; i < lifted.size(); ++i) {
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) {
                        remaining.push_back(std::move(lifted[i]));
                    }
                }
                lifted = std::move(remaining);
                return true;
            });
            if (!hit) {
                ++k;
            }
        }
        found.push_back(y_primitive(rest));
        std::vector<BiPoly<F>> out;
        BiPoly<F> check(1L);
        for (const auto& g : found) {
            out.push_back(make_monic(shift_x(g, -x0)));
            check = check * out.back();
        }
        if (make_monic(check) == make_monic(P)) {
            return out;
        }
    }
    throw FactorizationIncomplete(to_string(P));
}

}  // namespace detail

template <Field F>
std::vector<Poly<F>> factor_squarefree_univariate(const Poly<F>& f, const Context<F>& ctx, std::uint64_t seed)
{
    if (f.degree() <= 0) {
        return {};
    }
    auto out = detail::factor_sqf(f, ctx, seed);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare(a, b) < 0; });
    return out;
}

/// Squarefree decomposition in var: unit * prod factor^multiplicity, factors
/// pairwise coprime and squarefree, one per multiplicity in increasing order;
/// factors free of var are merged in.
template <Field F>
Factorization<F> squarefree(const BiPoly<F>& p, Var var)
{
    if (p.is_zero()) {
        throw ZeroPolynomial();
    }
    if (var == Var::X) {
        Factorization<F> t = squarefree(transpose(p), Var::Y);
        for (auto& [f, e] : t.factors) {
            f = transpose(f);
        }
        return t;
    }
    Factorization<F> out{leading_scalar(p), {}};
    auto [c, pp] = content_primitive(p, Var::Y);
    std::vector<std::pair<BiPoly<F>, int>> parts;
    if (c.degree() == 0 && c.lc().degree() > 0) {
        for (const auto& s : squarefree_decomposition(c.lc())) {
            parts.emplace_back(from_x(s.factor), s.multiplicity);
        }
    }
    if (pp.degree() > 0) {
        for (const auto& s : squarefree_decomposition(pp)) {
            parts.emplace_back(make_monic(s.factor), s.multiplicity);
        }
    }
    // merge equal multiplicities
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    for (auto& [f, e] : parts) {
        if (!out.factors.empty() && out.factors.back().second == e) {
            out.factors.back().first = make_monic(out.factors.back().first * f);
        } else {
            out.factors.emplace_back(f, e);
        }
    }
    return out;
}

/// Irreducible factorization over k, factors normalized and sorted.
template <Field F>
Factorization<F> factor(const BiPoly<F>& p, const Context<F>& ctx, std::uint64_t seed)
{
    if (p.is_zero()) {
        throw ZeroPolynomial();
    }
    Factorization<F> out{leading_scalar(p), {}};
    auto [c, pp] = content_primitive(p, Var::Y);
    if (c.lc().degree() > 0) {
        for (auto& [g, e] : factor_univariate(make_monic(c.lc()), ctx, seed)) {
            out.factors.emplace_back(from_x(g), e);
        }
    }
    if (pp.degree() > 0) {
        for (const auto& s : squarefree_decomposition(pp)) {
            for (auto& g : detail::factor_primitive_squarefree(make_monic(s.factor), ctx, seed)) {
                out.factors.emplace_back(std::move(g), s.multiplicity);
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    if (!(out.expand() == p)) {
        throw FactorizationIncomplete(to_string(p));
    }
    return out;
}

}  // namespace biexact

#endif
