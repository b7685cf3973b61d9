#ifndef BIEXACT_REDUCE_HPP
#define BIEXACT_REDUCE_HPP

#include <map>
#include <optional>
#include <vector>

#include "biexact/orbit.hpp"
#include "biexact/resdec.hpp"

namespace biexact {

/// The y-direction operator of a reduction.
enum class YOp { DerivY, ShiftY };

/// f = phi(g) - g + dy(h) + sum of terms; phi = Identity means no x-part.
template <Field F>
struct ReducedForm {
    RatFunc<F> g;
    RatFunc<F> h;
    std::vector<PfdTerm<F>> terms;
    Shift phi = Shift::Identity;
    YOp yop = YOp::DerivY;

    RatFunc<F> residual(const Context<F>& ctx) const
    {
        RatFunc<F> r;
        for (const auto& t : terms) {
            r = r + term_value(t, ctx);
        }
        return r;
    }

    RatFunc<F> recompose(const Context<F>& ctx) const
    {
        RatFunc<F> r = residual(ctx);
        if (phi != Shift::Identity) {
            r = r + delta(g, phi, ctx);
        }
        r = r + (yop == YOp::DerivY ? deriv_y(h) : delta(h, Shift::SigmaY, ctx));
        return r;
    }
};

/// y-free rational function or polynomial in y over k(x) as an element of k(x)[y].
template <Field F>
KPoly<F> to_kpoly(const RatFunc<F>& f)
{
    if (f.den().degree() > 0) {
        throw std::invalid_argument("not a polynomial in y");
    }
    KField<F> c(f.den().lc());
    return to_kpoly(f.num()).scaled(c.inv());
}

/// H with dH/dy = p.
template <Field F>
KPoly<F> antiderivative_y(const KPoly<F>& p)
{
    std::vector<KField<F>> c(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        c[i + 1] = p.coeffs()[i] / KField<F>(F(static_cast<long>(i + 1)));
    }
    return KPoly<F>(std::move(c));
}

/// H with H(y + 1) - H(y) = p, via the falling factorial basis.
template <Field F>
KPoly<F> antidifference_y(const KPoly<F>& p)
{
    if (p.is_zero()) {
        return p;
    }
    const int n = p.degree();
    // b_k = (Delta^k p)(0) / k!
    std::vector<KField<F>> vals;
    for (int i = 0; i <= n; ++i) {
        vals.push_back(eval(p, KField<F>(F(static_cast<long>(i)))));
    }
    KPoly<F> out;
    KField<F> fact(1L);
    KPoly<F> falling(1L);  // y (y-1) ... (y-k)
    for (int k = 0; k <= n; ++k) {
        falling = falling * (KPoly<F>::variable() - KPoly<F>(KField<F>(F(static_cast<long>(k)))));
        if (k > 0) {
            fact = fact * KField<F>(F(static_cast<long>(k)));
        }
        KField<F> bk = vals[0] / fact;
        // y^(k+1 falling) / (k + 1)
        out = out + falling.scaled(bk / KField<F>(F(static_cast<long>(k + 1))));
        for (int i = 0; i + 1 < static_cast<int>(vals.size()); ++i) {
            vals[static_cast<std::size_t>(i)] = vals[static_cast<std::size_t>(i + 1)] - vals[static_cast<std::size_t>(i)];
        }
        vals.pop_back();
    }
    return out;
}

template <Field F>
struct Collapse {
    RatFunc<F> u;
    RatFunc<F> v;
    RatFunc<F> numerator;  // phi1^-m phi2^-n (a), over d^j
};

/// a / (phi1^m phi2^n d)^j = phi1(u) - u + phi2(v) - v + phi1^-m phi2^-n (a) / d^j.
template <Field F>
Collapse<F> orbit_collapse(const RatFunc<F>& a, const BiPoly<F>& d, int j, long m, long n, Shift phi1, Shift phi2,
                           const Context<F>& ctx)
{
    if (m < 0 || n < 0) {
        throw std::invalid_argument("orbit_collapse: negative offset");
    }
    if (phi1 == Shift::Identity) {
        m = 0;
    }
    if (phi2 == Shift::Identity) {
        n = 0;
    }
    const unsigned e = static_cast<unsigned>(j);
    Collapse<F> out;
    const BiPoly<F> dn = act(d, phi2, n, ctx);
    for (long i = 0; i < m; ++i) {
        out.u = out.u + act(a, phi1, i - m, ctx) / RatFunc<F>(pow(act(dn, phi1, i, ctx), e));
    }
    const RatFunc<F> am = act(a, phi1, -m, ctx);
    for (long k = 0; k < n; ++k) {
        out.v = out.v + act(am, phi2, k - n, ctx) / RatFunc<F>(pow(act(d, phi2, k, ctx), e));
    }
    out.numerator = act(am, phi2, -n, ctx);
    return out;
}

/// Ostrogradsky-Hermite: f = Dy(h) + sum a_i / d_i with simple irreducible d_i.
template <Field F>
ReducedForm<F> hermite_reduce_y(const RatFunc<F>& f, const Context<F>& ctx)
{
    ReducedForm<F> out;
    out.phi = Shift::Identity;
    out.yop = YOp::DerivY;
    const KPoly<F> N = to_kpoly(f.num());
    const KPoly<F> D = to_kpoly(f.den());
    auto [poly, A] = divmod(N, D);
    out.h = from_kpoly(antiderivative_y(poly));
    if (A.is_zero()) {
        return out;
    }
    // D = kappa prod D_i^i over k(x)
    std::vector<std::pair<BiPoly<F>, int>> parts;
    KPoly<F> prod(1L);
    for (auto& [g, e] : squarefree(f.den(), Var::Y).factors) {
        if (g.degree() > 0) {
            BiPoly<F> gy = content_primitive(g, Var::Y).second;
            prod = prod * pow(to_kpoly(gy), static_cast<unsigned>(e));
            parts.emplace_back(std::move(gy), e);
        }
    }
    auto kappa = divmod(D, prod).first;
    A = A.scaled(kappa.lc().inv());
    KPoly<F> Dcur = prod;
    RatFunc<F> g;
    for (const auto& [Vb, i] : parts) {
        if (i < 2) {
            continue;
        }
        const KPoly<F> V = to_kpoly(Vb);
        const KPoly<F> U = exact_divide(Dcur, pow(V, static_cast<unsigned>(i)));
        const KPoly<F> UV1 = U * derivative(V);
        for (int j = i - 1; j >= 1; --j) {
            KPoly<F> rhs = A.scaled(KField<F>(F(static_cast<long>(-j))).inv());
            auto [B, C] = solve_bezout(UV1, V, rhs);
            g = g + from_kpoly(B) / RatFunc<F>(pow(Vb, static_cast<unsigned>(j)));
            A = C.scaled(KField<F>(F(static_cast<long>(-j)))) - U * derivative(B);
        }
        Dcur = U * V;
    }
    out.h = out.h + g;
    // simple part A / Dcur over irreducible factors
    std::vector<std::pair<BiPoly<F>, int>> simple;
    for (const auto& [Vb, i] : parts) {
        for (auto& [p, e] : factor(Vb, ctx).factors) {
            if (p.degree() > 0) {
                simple.emplace_back(std::move(p), 1);
            }
        }
    }
    std::sort(simple.begin(), simple.end(), [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    if (!A.is_zero()) {
        out.terms = partial_fractions_with(A, Dcur, simple).terms;
    }
    return out;
}

/// Abramov reduction: f = Delta_y(h) + sum a_ij / d_i^j, d_i pairwise
/// sigma_y-inequivalent.
template <Field F>
ReducedForm<F> abramov_reduce_y(const RatFunc<F>& f, const Context<F>& ctx)
{
    ReducedForm<F> out;
    out.phi = Shift::Identity;
    out.yop = YOp::ShiftY;
    Decomposition<F> sd = sigma_decomposition(f, ctx);
    out.h = from_kpoly(antidifference_y(sd.poly_part));
    std::vector<PfdTerm<F>> acc;
    for (const auto& t : sd.terms) {
        KPoly<F> a = t.a;
        if (t.l > 0) {
            auto c = orbit_collapse(from_kpoly(t.a), t.d, t.j, 0, t.l, Shift::Identity, Shift::SigmaY, ctx);
            out.h = out.h + c.v;
            a = to_kpoly(c.numerator);
        }
        auto it = std::find_if(acc.begin(), acc.end(), [&](const PfdTerm<F>& s) { return s.j == t.j && s.d == t.d; });
        if (it == acc.end()) {
            acc.push_back(PfdTerm<F>{a, t.d, t.j, 0});
        } else {
            it->a = it->a + a;
        }
    }
    for (auto& t : acc) {
        if (!t.a.is_zero()) {
            out.terms.push_back(std::move(t));
        }
    }
    sort_terms(out.terms);
    return out;
}

namespace detail {

/// Classes of phi-equivalent polynomials: for each input index, the class
/// representative index (least offset member).
template <Field F>
std::vector<std::size_t> orbit_classes(const std::vector<BiPoly<F>>& ds, auto&& equivalent)
{
    const std::size_t n = ds.size();
    std::vector<std::size_t> base(n, n);
    std::vector<long> off(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (base[i] != n) {
            continue;
        }
        base[i] = i;
        for (std::size_t k = i + 1; k < n; ++k) {
            if (base[k] != n) {
                continue;
            }
            if (auto o = equivalent(ds[i], ds[k])) {
                base[k] = i;
                off[k] = *o;
            }
        }
    }
    std::vector<std::size_t> rep(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = base[i];
        for (std::size_t k = 0; k < n; ++k) {
            if (base[k] == base[i] && off[k] < off[r]) {
                r = k;
            }
        }
        rep[i] = r;
    }
    return rep;
}

template <Field F>
void accumulate(std::vector<PfdTerm<F>>& acc, const BiPoly<F>& d, int j, const KPoly<F>& a)
{
    auto it = std::find_if(acc.begin(), acc.end(), [&](const PfdTerm<F>& s) { return s.j == j && s.d == d; });
    if (it == acc.end()) {
        acc.push_back(PfdTerm<F>{a, d, j, 0});
    } else {
        it->a = it->a + a;
    }
}

template <Field F>
std::vector<PfdTerm<F>> nonzero_sorted(std::vector<PfdTerm<F>> acc)
{
    std::vector<PfdTerm<F>> out;
    for (auto& t : acc) {
        if (!t.a.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    sort_terms(out);
    return out;
}

}  // namespace detail

/// Hermite reduction followed by collapsing phi-orbits (phi in {sigma_x, tau_x}).
template <Field F>
ReducedForm<F> phi_dy_reduced_form(const RatFunc<F>& f, Shift phi, const Context<F>& ctx)
{
    if (phi == Shift::TauX && ctx.root_of_unity()) {
        throw QModeMismatch("(tau, Dy)-reduction requires q not a root of unity");
    }
    ReducedForm<F> hr = hermite_reduce_y(f, ctx);
    ReducedForm<F> out;
    out.phi = phi;
    out.yop = YOp::DerivY;
    out.h = hr.h;
    std::vector<BiPoly<F>> ds;
    for (const auto& t : hr.terms) {
        ds.push_back(t.d);
    }
    auto rep = detail::orbit_classes<F>(ds, [&](const BiPoly<F>& a, const BiPoly<F>& b) -> std::optional<long> {
        auto w = shift_equivalent(a, b, phi, ctx);
        return w ? std::optional<long>(w->m) : std::nullopt;
    });
    std::vector<PfdTerm<F>> acc;
    for (std::size_t i = 0; i < hr.terms.size(); ++i) {
        const auto& t = hr.terms[i];
        const BiPoly<F>& r = ds[rep[i]];
        if (rep[i] == i) {
            detail::accumulate(acc, r, t.j, t.a);
            continue;
        }
        auto w = shift_equivalent(r, t.d, phi, ctx);
        // t.d = phi^m(r) / scale
        F s = w->scale;
        RatFunc<F> a = from_kpoly(t.a) * RatFunc<F>(field_pow(s, static_cast<unsigned>(t.j)));
        auto c = orbit_collapse(a, r, t.j, w->m, 0, phi, Shift::Identity, ctx);
        out.g = out.g + c.u;
        detail::accumulate(acc, r, t.j, to_kpoly(c.numerator));
    }
    out.terms = detail::nonzero_sorted(std::move(acc));
    return out;
}

/// Abramov reduction in y followed by collapsing joint (tau, sigma_y)-orbits.
template <Field F>
ReducedForm<F> tau_sigma_reduced_form(const RatFunc<F>& f, const Context<F>& ctx)
{
    if (ctx.root_of_unity()) {
        throw QModeMismatch("(tau, sigma_y)-reduction requires q not a root of unity");
    }
    ReducedForm<F> ar = abramov_reduce_y(f, ctx);
    ReducedForm<F> out;
    out.phi = Shift::TauX;
    out.yop = YOp::ShiftY;
    out.h = ar.h;
    // distinct denominators and their joint classes
    std::vector<BiPoly<F>> ds;
    for (const auto& t : ar.terms) {
        if (std::find(ds.begin(), ds.end(), t.d) == ds.end()) {
            ds.push_back(t.d);
        }
    }
    const std::size_t n = ds.size();
    std::vector<std::size_t> base(n, n);
    std::vector<OrbitWitness<F>> wit(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (base[i] != n) {
            continue;
        }
        base[i] = i;
        for (std::size_t k = i + 1; k < n; ++k) {
            if (base[k] == n) {
                if (auto w = joint_equivalent(ds[i], ds[k], ctx)) {
                    base[k] = i;
                    wit[k] = *w;
                }
            }
        }
    }
    // re-base each class at tau^mmin sigma^nmin of its first member
    std::vector<BiPoly<F>> rebased(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (base[i] != i) {
            continue;
        }
        long mmin = 0, nmin = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (base[k] == i) {
                mmin = std::min(mmin, wit[k].m);
                nmin = std::min(nmin, wit[k].n);
            }
        }
        rebased[i] = make_monic(act(act(ds[i], Shift::SigmaY, nmin, ctx), Shift::TauX, mmin, ctx));
    }
    std::vector<PfdTerm<F>> acc;
    for (const auto& t : ar.terms) {
        std::size_t k = static_cast<std::size_t>(std::find(ds.begin(), ds.end(), t.d) - ds.begin());
        const BiPoly<F>& b = rebased[base[k]];
        auto w = joint_equivalent(b, t.d, ctx);
        if (!w || w->m < 0 || w->n < 0) {
            throw std::logic_error("tau_sigma_reduced_form: inconsistent orbit witness");
        }
        RatFunc<F> a = from_kpoly(t.a) * RatFunc<F>(field_pow(w->scale, static_cast<unsigned>(t.j)));
        auto c = orbit_collapse(a, b, t.j, w->m, w->n, Shift::TauX, Shift::SigmaY, ctx);
        out.g = out.g + c.u;
        out.h = out.h + c.v;
        detail::accumulate(acc, b, t.j, to_kpoly(c.numerator));
    }
    out.terms = detail::nonzero_sorted(std::move(acc));
    return out;
}

/// Outcome of a univariate summability test in x.
template <Field F>
struct SummabilityResult {
    bool summable = false;
    std::optional<RatFunc<F>> certificate;
    /// (d, j, residue); d = 1, j = 0 marks the Laurent constant term.
    std::vector<PfdTerm<F>> obstruction;
};

/// The element a(x) of k(x) stored in k(x)[y] as a constant.
template <Field F>
KPoly<F> kpoly_of_x(const RatFunc<F>& a)
{
    if (a.num().degree() > 0 || a.den().degree() > 0) {
        throw std::invalid_argument("expected a function of x alone");
    }
    return KPoly<F>(KField<F>(a.num().coeff(0), a.den().coeff(0)));
}

/// Is f in k(x) of the form g(x + 1) - g(x)?
template <Field F>
SummabilityResult<F> abramov_summable_x(const RatFunc<F>& f, const Context<F>& ctx)
{
    SummabilityResult<F> out;
    ReducedForm<F> ar = abramov_reduce_y(transpose(f), ctx);
    if (!ar.terms.empty()) {
        for (const auto& t : ar.terms) {
            out.obstruction.push_back(PfdTerm<F>{kpoly_of_x(transpose(from_kpoly(t.a))), transpose(t.d), t.j, 0});
        }
        return out;
    }
    RatFunc<F> g = transpose(ar.h);
    if (!(delta(g, Shift::SigmaX, ctx) == f)) {
        throw std::logic_error("abramov_summable_x: certificate does not verify");
    }
    out.summable = true;
    out.certificate = std::move(g);
    return out;
}

/// Is f in k(x) of the form g(q x) - g(x)? q must not be a root of unity.
template <Field F>
SummabilityResult<F> q_summable_x(const RatFunc<F>& f, const Context<F>& ctx)
{
    if (ctx.root_of_unity() || !ctx.q) {
        throw QModeMismatch("q-summability requires q not a root of unity");
    }
    SummabilityResult<F> out;
    const BiPoly<F> xb = bi_x<F>();
    Decomposition<F> pd = partial_fractions(transpose(f), ctx);
    // Laurent part: polynomial part plus powers of x in the denominator
    std::map<long, F> laurent;
    for (std::size_t k = 0; k < pd.poly_part.size(); ++k) {
        const auto& c = pd.poly_part.coeffs()[k];
        if (!c.is_zero()) {
            laurent[static_cast<long>(k)] = c.num().coeff(0) / c.den().coeff(0);
        }
    }
    std::vector<BiPoly<F>> ds;
    std::vector<std::pair<RatFunc<F>, int>> rest;
    for (const auto& t : pd.terms) {
        BiPoly<F> d = transpose(t.d);
        if (d == xb) {
            const auto& c = t.a.coeff(0);
            laurent[-static_cast<long>(t.j)] += c.num().coeff(0) / c.den().coeff(0);
            continue;
        }
        ds.push_back(d);
        rest.emplace_back(transpose(from_kpoly(t.a)), t.j);
    }
    RatFunc<F> g;
    for (const auto& [k, c] : laurent) {
        if (c.is_zero()) {
            continue;
        }
        if (k == 0) {
            out.obstruction.push_back(PfdTerm<F>{KPoly<F>(KField<F>(c)), BiPoly<F>(1L), 0, 0});
            continue;
        }
        RatFunc<F> xk = k > 0 ? RatFunc<F>(pow(xb, static_cast<unsigned>(k)))
                              : RatFunc<F>(1L) / RatFunc<F>(pow(xb, static_cast<unsigned>(-k)));
        g = g + xk * RatFunc<F>(c / (qpow(ctx, k) - F(1L)));
    }
    auto rep = detail::orbit_classes<F>(ds, [&](const BiPoly<F>& a, const BiPoly<F>& b) -> std::optional<long> {
        auto w = q_equivalent(a, b, ctx);
        return w ? std::optional<long>(w->m) : std::nullopt;
    });
    std::vector<std::pair<std::pair<std::size_t, int>, RatFunc<F>>> sums;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const BiPoly<F>& r = ds[rep[i]];
        const auto& [a, j] = rest[i];
        RatFunc<F> collapsed = a;
        if (rep[i] != i) {
            auto w = q_equivalent(r, ds[i], ctx);
            RatFunc<F> as = a * RatFunc<F>(field_pow(w->scale, static_cast<unsigned>(j)));
            auto c = orbit_collapse(as, r, j, w->m, 0, Shift::TauX, Shift::Identity, ctx);
            g = g + c.u;
            collapsed = c.numerator;
        }
        auto it = std::find_if(sums.begin(), sums.end(), [&](const auto& s) { return s.first == std::make_pair(rep[i], j); });
        if (it == sums.end()) {
            sums.push_back({{rep[i], j}, collapsed});
        } else {
            it->second = it->second + collapsed;
        }
    }
    for (const auto& [key, s] : sums) {
        if (!s.is_zero()) {
            out.obstruction.push_back(PfdTerm<F>{kpoly_of_x(s), ds[key.first], key.second, 0});
        }
    }
    if (!out.obstruction.empty()) {
        sort_terms(out.obstruction);
        return out;
    }
    if (!(delta(g, Shift::TauX, ctx) == f)) {
        throw std::logic_error("q_summable_x: certificate does not verify");
    }
    out.summable = true;
    out.certificate = std::move(g);
    return out;
}

/// sum_{i < m} tau^i (f) for q a primitive m-th root of unity.
template <Field F>
RatFunc<F> trace_xm(const RatFunc<F>& f, const Context<F>& ctx)
{
    if (!ctx.root_of_unity()) {
        throw QModeMismatch("trace requires q a root of unity");
    }
    RatFunc<F> r;
    for (long i = 0; i < ctx.mode.order(); ++i) {
        r = r + act(f, Shift::TauX, i, ctx);
    }
    return r;
}

template <Field F>
struct RootOfUnityReduction {
    RatFunc<F> g;
    RatFunc<F> c;  // in k(y)(x^m)
};

/// f = tau(g) - g + c with c = trace(f) / m.
template <Field F>
RootOfUnityReduction<F> tau_reduced_root_of_unity(const RatFunc<F>& f, const Context<F>& ctx)
{
    RatFunc<F> c = trace_xm(f, ctx);
    const long m = ctx.mode.order();
    c = c * RatFunc<F>(F(m).inv());
    RatFunc<F> f0 = f - c;
    RatFunc<F> g;
    for (long i = 1; i < m; ++i) {
        g = g + act(f0, Shift::TauX, i, ctx) * RatFunc<F>(F(i));
    }
    g = g * RatFunc<F>(F(m).inv());
    if (!(delta(g, Shift::TauX, ctx) + c == f)) {
        throw std::logic_error("tau_reduced_root_of_unity: recomposition failed");
    }
    return {std::move(g), std::move(c)};
}

}  // namespace biexact

#endif
