#ifndef BIEXACT_RESDEC_HPP
#define BIEXACT_RESDEC_HPP

#include <algorithm>
#include <vector>

#include "biexact/factor.hpp"
#include "biexact/orbit.hpp"
#include "biexact/ratfunc.hpp"

namespace biexact {

/// a / sigma_y^l(d)^j with a in k(x)[y], deg_y a < deg_y d.
template <Field F>
struct PfdTerm {
    KPoly<F> a;
    BiPoly<F> d;
    int j = 1;
    long l = 0;
};

template <Field F>
RatFunc<F> term_value(const PfdTerm<F>& t, const Context<F>& ctx)
{
    BiPoly<F> d = act(t.d, Shift::SigmaY, t.l, ctx);
    return from_kpoly(t.a) / RatFunc<F>(pow(d, static_cast<unsigned>(t.j)));
}

template <Field F>
struct Decomposition {
    KPoly<F> poly_part;
    std::vector<PfdTerm<F>> terms;

    RatFunc<F> recompose(const Context<F>& ctx) const
    {
        RatFunc<F> r = from_kpoly(poly_part);
        for (const auto& t : terms) {
            r = r + term_value(t, ctx);
        }
        return r;
    }
};

/// Canonical term order: denominator, then multiplicity, then offset.
template <Field F>
void sort_terms(std::vector<PfdTerm<F>>& terms)
{
    std::stable_sort(terms.begin(), terms.end(), [](const PfdTerm<F>& a, const PfdTerm<F>& b) {
        int c = compare(a.d, b.d);
        if (c != 0) {
            return c < 0;
        }
        if (a.j != b.j) {
            return a.j < b.j;
        }
        return a.l < b.l;
    });
}

/// Irreducible factors of positive y-degree with multiplicities; the rest of
/// the polynomial is a unit of k(x).
template <Field F>
std::vector<std::pair<BiPoly<F>, int>> y_factors(const BiPoly<F>& d, const Context<F>& ctx)
{
    std::vector<std::pair<BiPoly<F>, int>> out;
    if (d.degree() <= 0) {
        return out;
    }
    auto pp = content_primitive(d, Var::Y).second;
    for (auto& [g, e] : factor(pp, ctx).factors) {
        if (g.degree() > 0) {
            out.emplace_back(std::move(g), e);
        }
    }
    return out;
}

/// Partial fractions of n/d over k(x) for a given factorization of d's
/// y-dependent part; the k(x)-unit of d is divided out.
template <Field F>
Decomposition<F> partial_fractions_with(const KPoly<F>& num, const KPoly<F>& den,
                                         const std::vector<std::pair<BiPoly<F>, int>>& factors)
{
    BiPoly<F> bprod(1L);
    std::vector<BiPoly<F>> powers;
    for (const auto& [g, e] : factors) {
        powers.push_back(pow(g, static_cast<unsigned>(e)));
        bprod = bprod * powers.back();
    }
    const KPoly<F> prod = to_kpoly(bprod);
    auto unit = divmod(den, prod);
    if (unit.first.degree() != 0 || !unit.second.is_zero()) {
        throw std::logic_error("partial fractions: factorization does not match denominator");
    }
    KPoly<F> n = num.scaled(unit.first.lc().inv());
    auto [poly, rem] = divmod(n, prod);
    Decomposition<F> out{std::move(poly), {}};
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (rem.is_zero()) {
            break;
        }
        const BiPoly<F>& pi = powers[i];
        KPoly<F> ri;
        if (factors.size() == 1) {
            ri = rem;
        } else {
            // rem / other mod pi, fraction-free
            auto [s, c] = inverse_mod_cleared(exact_divide(bprod, pi), pi);
            auto rc = clear_denominators(rem);
            const BiPoly<F> t = rc.num * s;
            Poly<F> scale = rc.den * c;
            if (t.degree() >= pi.degree()) {
                scale = scale * pow(pi.lc(), static_cast<unsigned>(t.degree() - pi.degree() + 1));
            }
            const KField<F> inv = KField<F>(scale).inv();
            ri = to_kpoly(pseudo_divmod(t, pi).second).scaled(inv);
        }
        // d-adic expansion: ri = sum c_k d^k, term c_k / d^(e - k)
        const KPoly<F> dk = to_kpoly(factors[i].first);
        const int e = factors[i].second;
        KPoly<F> r = ri;
        for (int k = 0; k < e && !r.is_zero(); ++k) {
            auto [q, c] = divmod(r, dk);
            if (!c.is_zero()) {
                out.terms.push_back(PfdTerm<F>{std::move(c), factors[i].first, e - k, 0});
            }
            r = std::move(q);
        }
    }
    sort_terms(out.terms);
    return out;
}

/// f = p + sum a_ij / d_i^j over k(x)[y], d_i distinct irreducible.
template <Field F>
Decomposition<F> partial_fractions(const RatFunc<F>& f, const Context<F>& ctx)
{
    return partial_fractions_with(to_kpoly(f.num()), to_kpoly(f.den()), y_factors(f.den(), ctx));
}

/// Groups of sigma_y-equivalent terms. Each term is rewritten against the
/// member of its class with the smallest shift, so all offsets l >= 0.
template <Field F>
Decomposition<F> sigma_decomposition(const RatFunc<F>& f, const Context<F>& ctx)
{
    Decomposition<F> plain = partial_fractions(f, ctx);
    // classes of distinct denominators
    std::vector<BiPoly<F>> dens;
    for (const auto& t : plain.terms) {
        if (dens.empty() || !(dens.back() == t.d)) {
            dens.push_back(t.d);
        }
    }
    std::vector<int> cls(dens.size(), -1);
    std::vector<long> offset(dens.size(), 0);
    int ncls = 0;
    for (std::size_t i = 0; i < dens.size(); ++i) {
        if (cls[i] >= 0) {
            continue;
        }
        cls[i] = ncls;
        for (std::size_t k = i + 1; k < dens.size(); ++k) {
            if (cls[k] >= 0) {
                continue;
            }
            if (auto w = sigma_equivalent(dens[i], dens[k], Var::Y)) {
                cls[k] = ncls;
                offset[k] = w->n;
            }
        }
        ++ncls;
    }
    // representative: least offset in the class
    std::vector<std::size_t> rep(static_cast<std::size_t>(ncls), dens.size());
    for (std::size_t i = 0; i < dens.size(); ++i) {
        std::size_t& r = rep[static_cast<std::size_t>(cls[i])];
        if (r == dens.size() || offset[i] < offset[r]) {
            r = i;
        }
    }
    Decomposition<F> out{plain.poly_part, {}};
    for (const auto& t : plain.terms) {
        std::size_t i = static_cast<std::size_t>(std::find(dens.begin(), dens.end(), t.d) - dens.begin());
        std::size_t r = rep[static_cast<std::size_t>(cls[i])];
        out.terms.push_back(PfdTerm<F>{t.a, dens[r], t.j, offset[i] - offset[r]});
    }
    sort_terms(out.terms);
    return out;
}

template <Field F>
BiPoly<F> canonical_factor(const BiPoly<F>& d)
{
    return content_primitive(d, Var::Y).second;
}

/// Coefficient of 1/d in the partial fraction decomposition of f.
template <Field F>
KPoly<F> residue_dy(const RatFunc<F>& f, const BiPoly<F>& d, const Context<F>& ctx)
{
    const BiPoly<F> dn = canonical_factor(d);
    for (const auto& t : partial_fractions(f, ctx).terms) {
        if (t.j == 1 && t.d == dn) {
            return t.a;
        }
    }
    return KPoly<F>();
}

/// sum over the sigma_y-orbit of d of the numerators at multiplicity j,
/// each shifted onto d; sd is a sigma decomposition.
template <Field F>
KPoly<F> residue_sigma(const Decomposition<F>& sd, const BiPoly<F>& d, int j, const Context<F>& ctx)
{
    const BiPoly<F> dn = canonical_factor(d);
    KPoly<F> r;
    for (const auto& t : sd.terms) {
        if (t.j != j) {
            continue;
        }
        auto w = sigma_equivalent(t.d, dn, Var::Y);
        if (!w) {
            continue;
        }
        // sigma^s(rep) = d; the term sits at sigma^l(rep) = sigma^(l-s)(d)
        r = r + act(t.a, Shift::SigmaY, w->n - t.l, ctx);
    }
    return r;
}

template <Field F>
KPoly<F> residue_sigma(const RatFunc<F>& f, const BiPoly<F>& d, int j, const Context<F>& ctx)
{
    return residue_sigma(sigma_decomposition(f, ctx), d, j, ctx);
}

}  // namespace biexact

#endif
