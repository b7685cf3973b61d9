#ifndef BIEXACT_BRUTE_FORCE_HPP
#define BIEXACT_BRUTE_FORCE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "biexact/cyclotomic.hpp"
#include "biexact/decide.hpp"
#include "biexact/zassenhaus.hpp"

namespace biexact {

struct SearchBounds {
    int radius = 4;
    int degree = 4;
};

namespace oracle {

using Zp = std::uint64_t;

/// Ring map from the coefficient field to Z/p; fails on elements whose
/// denominator vanishes mod p.
template <Field F>
struct ModMap;

template <>
struct ModMap<Rational> {
    Zp p;
    ModMap(const Context<Rational>&, std::mt19937_64&) : p(prime_one_mod(1, 2147483647ULL)) {}
    Zp operator()(const Rational& r) const
    {
        Zp n = mpz_fdiv_ui(r.num().get_mpz_t(), p);
        Zp d = mpz_fdiv_ui(r.den().get_mpz_t(), p);
        return n * zp::inv(d, p) % p;
    }
};

template <>
struct ModMap<Cyclotomic> {
    Zp p;
    Zp root = 1;
    ModMap<Rational> base;
    ModMap(const Context<Cyclotomic>& ctx, std::mt19937_64& rng)
        : p(prime_one_mod(std::max(1, ctx.mode.order()), 2147483647ULL)), base(Context<Rational>{}, rng)
    {
        base.p = p;
        if (ctx.q && ctx.qv().context()) {
            // zeta -> a root of Phi_m mod p, matching q = zeta
            root = primitive_roots(ctx.qv().context()->order, p).front();
        }
    }
    Zp operator()(const Cyclotomic& c) const
    {
        Zp acc = 0;
        const auto& cs = c.rep().coeffs();
        for (std::size_t j = cs.size(); j-- > 0;) {
            acc = (acc * root + base(cs[j])) % p;
        }
        return acc;
    }
};

template <>
struct ModMap<RatFunc1<Rational>> {
    Zp p;
    Zp s;
    ModMap<Rational> base;
    ModMap(const Context<RatFunc1<Rational>>&, std::mt19937_64& rng)
        : p(prime_one_mod(1, 2147483647ULL)), s(0), base(Context<Rational>{}, rng)
    {
        s = 2 + rng() % (p - 3);
    }
    Zp poly(const Poly<Rational>& a) const
    {
        Zp acc = 0;
        for (std::size_t j = a.size(); j-- > 0;) {
            acc = (acc * s + base(a.coeffs()[j])) % p;
        }
        return acc;
    }
    Zp operator()(const RatFunc1<Rational>& r) const { return poly(r.num()) * zp::inv(poly(r.den()), p) % p; }
};

/// Polynomial in x, y over Z/p, table[i][j] = coefficient of y^i x^j.
struct ModBi {
    std::vector<std::vector<Zp>> table;
    Zp operator()(Zp x, Zp y, Zp p) const
    {
        Zp acc = 0;
        for (std::size_t i = table.size(); i-- > 0;) {
            Zp c = 0;
            for (std::size_t j = table[i].size(); j-- > 0;) {
                c = (c * x + table[i][j]) % p;
            }
            acc = (acc * y + c) % p;
        }
        return acc;
    }
};

template <Field F>
ModBi reduce_bi(const BiPoly<F>& a, const ModMap<F>& mm)
{
    ModBi out;
    for (const auto& c : a.coeffs()) {
        std::vector<Zp> row;
        for (const auto& v : c.coeffs()) {
            row.push_back(mm(v));
        }
        out.table.push_back(std::move(row));
    }
    return out;
}

inline Zp pow_mod(Zp b, unsigned e, Zp p)
{
    Zp r = 1;
    while (e > 0) {
        if (e & 1U) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1U;
    }
    return r;
}

/// One unknown: coefficient of x^a y^b / den in g (in_g) or h.
template <Field F>
struct Piece {
    bool in_g;
    BiPoly<F> den;
    int a;
    int b;
};

/// Solves rows * c = rhs mod p with c zero off the pivot columns; returns the
/// columns where c is nonzero, or nullopt when inconsistent.
inline std::optional<std::vector<std::size_t>> support_mod_p(std::vector<std::vector<Zp>> rows, std::size_t n, Zp p)
{
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t k = r;
        while (k < rows.size() && rows[k][c] == 0) {
            ++k;
        }
        if (k == rows.size()) {
            continue;
        }
        std::swap(rows[k], rows[r]);
        const Zp iv = zp::inv(rows[r][c], p);
        for (std::size_t j = c; j <= n; ++j) {
            rows[r][j] = rows[r][j] * iv % p;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Zp f = rows[i][c];
            if (i == r || f == 0) {
                continue;
            }
            for (std::size_t j = c; j <= n; ++j) {
                rows[i][j] = (rows[i][j] + p - f * rows[r][j] % p) % p;
            }
        }
        piv.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][n] != 0) {
            return std::nullopt;
        }
    }
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i][n] != 0) {
            support.push_back(piv[i]);
        }
    }
    return support;
}

/// Solves the square-or-taller system rows * c = rhs over F exactly; nullopt
/// when inconsistent or rank deficient.
template <Field F>
std::optional<std::vector<F>> solve_exact(std::vector<std::vector<F>> rows, std::size_t n)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t k = r;
        while (k < rows.size() && rows[k][c].is_zero()) {
            ++k;
        }
        if (k == rows.size()) {
            return std::nullopt;
        }
        std::swap(rows[k], rows[r]);
        const F iv = rows[r][c].inv();
        for (std::size_t j = c; j <= n; ++j) {
            rows[r][j] = rows[r][j] * iv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) {
                continue;
            }
            const F f = rows[i][c];
            for (std::size_t j = c; j <= n; ++j) {
                rows[i][j] -= f * rows[r][j];
            }
        }
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i) {
        if (!rows[i][n].is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<F> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = rows[i][n];
    }
    return out;
}

template <Field F>
std::vector<BiPoly<F>> translates(const BiPoly<F>& t, Shift s, int radius, int period, const Context<F>& ctx)
{
    std::vector<BiPoly<F>> out;
    auto push = [&](const BiPoly<F>& p) {
        BiPoly<F> n = make_monic(p);
        if (std::find(out.begin(), out.end(), n) == out.end()) {
            out.push_back(std::move(n));
        }
    };
    if (s == Shift::Identity) {
        push(t);
    } else if (period > 0) {
        for (int k = 0; k < period; ++k) {
            push(act(t, s, k, ctx));
        }
    } else {
        for (int k = -radius; k <= radius; ++k) {
            push(act(t, s, k, ctx));
        }
    }
    return out;
}

}  // namespace oracle

/// Bounded search for g, h with f = d_x(g) + d_y(h). The ansatz is a sum of
/// pieces x^a y^b / t^j with a + b <= degree, t ranging over operator
/// translates (within the radius) of the irreducible factors of den(f) and
/// j up to multiplicity + 1, products u^i v^j of a y-free and an x-free
/// translate, products of two factors of den(f), and polynomial parts.
/// Consistency is first tested modulo a prime at random points, then the
/// system restricted to the pivot columns is solved exactly over F and the
/// result verified.
template <Field F>
std::optional<std::pair<RatFunc<F>, RatFunc<F>>> brute_force_exact(const RatFunc<F>& f, OperatorPair pair,
                                                                   const Context<F>& ctx,
                                                                   SearchBounds bounds = {}, std::uint64_t seed = 1)
{
    using namespace oracle;
    detail::check_pair(pair, ctx);
    if (f.is_zero()) {
        return std::make_pair(RatFunc<F>(), RatFunc<F>());
    }
    std::mt19937_64 rng(seed);
    const ModMap<F> mm(ctx, rng);
    const Zp p = mm.p;
    const Shift xs = x_operator(pair);
    const YOp yop = y_operator(pair);
    const bool rou = pair == OperatorPair::RootOfUnity_DerivY || pair == OperatorPair::RootOfUnity_ShiftY;
    const int period = rou ? ctx.mode.order() : 0;
    const Zp qm = ctx.q ? mm(ctx.qv()) : 0;
    const F qv = ctx.q ? ctx.qv() : F(1L);

    const auto fac = factor(f.den(), ctx).factors;
    const ModBi fnum = reduce_bi(f.num(), mm);
    const ModBi fden = reduce_bi(f.den(), mm);
    const int top = std::max(bounds.radius, bounds.degree);

    for (int level = 0; level <= top; ++level) {
        const int radius = std::min(level, bounds.radius);
        const int deg = std::min(level, bounds.degree);
        // denominators with their largest exponent
        std::vector<std::pair<BiPoly<F>, int>> gden, hden;
        auto add = [](std::vector<std::pair<BiPoly<F>, int>>& v, const BiPoly<F>& t, int e) {
            for (auto& [u, k] : v) {
                if (u == t) {
                    k = std::max(k, e);
                    return;
                }
            }
            v.emplace_back(t, e);
        };
        for (const auto& [t, e] : fac) {
            for (const auto& u : translates(t, xs, radius, period, ctx)) {
                add(gden, u, e + 1);
            }
            for (const auto& u : translates(t, yop == YOp::ShiftY ? Shift::SigmaY : Shift::Identity, radius, 0, ctx)) {
                add(hden, u, e + 1);
            }
        }
        std::vector<Piece<F>> pieces;
        auto monomials = [&](bool in_g, const BiPoly<F>& d) {
            for (int a = 0; a <= deg; ++a) {
                for (int b = 0; a + b <= deg; ++b) {
                    pieces.push_back(Piece<F>{in_g, d, a, b});
                }
            }
        };
        // powers of single translates, and products of a y-free with an
        // x-free one (those cannot be split into single pieces)
        auto fill = [&](bool in_g, const std::vector<std::pair<BiPoly<F>, int>>& dens) {
            monomials(in_g, bi_constant<F>(F(1L)));
            for (const auto& [t, e] : dens) {
                for (int j = 1; j <= e; ++j) {
                    monomials(in_g, pow(t, static_cast<unsigned>(j)));
                }
            }
            for (const auto& [u, eu] : dens) {
                if (u.degree() > 0) {
                    continue;
                }
                for (const auto& [v, ev] : dens) {
                    if (!is_free_of_x(v)) {
                        continue;
                    }
                    for (int i = 1; i <= eu; ++i) {
                        for (int j = 1; j <= ev; ++j) {
                            monomials(in_g, pow(u, static_cast<unsigned>(i)) * pow(v, static_cast<unsigned>(j)));
                        }
                    }
                }
            }
        };
        fill(true, gden);
        fill(false, hden);
        // products of two factors of den(f) itself
        for (std::size_t i = 0; i < fac.size(); ++i) {
            for (std::size_t k = i + 1; k < fac.size(); ++k) {
                for (int a = 1; a <= fac[i].second; ++a) {
                    for (int b = 1; b <= fac[k].second; ++b) {
                        const BiPoly<F> d = pow(fac[i].first, static_cast<unsigned>(a)) *
                                            pow(fac[k].first, static_cast<unsigned>(b));
                        monomials(true, d);
                        monomials(false, d);
                    }
                }
            }
        }
        const std::size_t n = pieces.size();

        // modular consistency
        std::vector<ModBi> tm, tym;
        for (const auto& pc : pieces) {
            tm.push_back(reduce_bi(pc.den, mm));
            tym.push_back(reduce_bi(derivative(pc.den), mm));
        }
        auto piece_mod = [&](std::size_t i, Zp x, Zp y) -> std::optional<Zp> {
            const auto& pc = pieces[i];
            auto term = [&](Zp xx, Zp yy) -> std::optional<Zp> {
                Zp t = tm[i](xx, yy, p);
                if (t == 0) {
                    return std::nullopt;
                }
                return pow_mod(xx, static_cast<unsigned>(pc.a), p) * pow_mod(yy, static_cast<unsigned>(pc.b), p) % p *
                       zp::inv(t, p) % p;
            };
            if (pc.in_g) {
                Zp x1 = xs == Shift::SigmaX ? (x + 1) % p : qm * x % p;
                auto u = term(x1, y);
                auto v = term(x, y);
                if (!u || !v) {
                    return std::nullopt;
                }
                return (*u + p - *v) % p;
            }
            if (yop == YOp::ShiftY) {
                auto u = term(x, (y + 1) % p);
                auto v = term(x, y);
                if (!u || !v) {
                    return std::nullopt;
                }
                return (*u + p - *v) % p;
            }
            Zp t = tm[i](x, y, p);
            if (t == 0) {
                return std::nullopt;
            }
            const Zp ty = tym[i](x, y, p);
            const Zp xa = pow_mod(x, static_cast<unsigned>(pc.a), p);
            const Zp it = zp::inv(t, p);
            Zp r = pc.b > 0 ? static_cast<Zp>(pc.b) * pow_mod(y, static_cast<unsigned>(pc.b - 1), p) % p : 0;
            Zp s = pow_mod(y, static_cast<unsigned>(pc.b), p) * ty % p * it % p;
            return xa * ((r + p - s) % p) % p * it % p;
        };
        std::vector<std::vector<Zp>> rows;
        std::uniform_int_distribution<Zp> dist(1, p - 1);
        while (rows.size() < n + 12) {
            const Zp x = dist(rng);
            const Zp y = dist(rng);
            const Zp fd = fden(x, y, p);
            if (fd == 0) {
                continue;
            }
            std::vector<Zp> row(n + 1);
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                auto v = piece_mod(i, x, y);
                ok = v.has_value();
                row[i] = ok ? *v : 0;
            }
            if (!ok) {
                continue;
            }
            row[n] = fnum(x, y, p) * zp::inv(fd, p) % p;
            rows.push_back(std::move(row));
        }
        auto piv = support_mod_p(std::move(rows), n, p);
        if (!piv) {
            continue;
        }

        // exact solve on the support of the modular solution
        const std::size_t r = piv->size();
        auto value = [&](const Piece<F>& pc, const F& x, const F& y) -> std::optional<F> {
            auto term = [&](const F& xx, const F& yy) -> std::optional<F> {
                F t = eval_xy(pc.den, xx, yy);
                if (t.is_zero()) {
                    return std::nullopt;
                }
                return field_pow(xx, static_cast<unsigned>(pc.a)) * field_pow(yy, static_cast<unsigned>(pc.b)) / t;
            };
            if (pc.in_g) {
                F x1 = xs == Shift::SigmaX ? x + F(1L) : qv * x;
                auto u = term(x1, y);
                auto v = term(x, y);
                if (!u || !v) {
                    return std::nullopt;
                }
                return *u - *v;
            }
            if (yop == YOp::ShiftY) {
                auto u = term(x, y + F(1L));
                auto v = term(x, y);
                if (!u || !v) {
                    return std::nullopt;
                }
                return *u - *v;
            }
            F t = eval_xy(pc.den, x, y);
            if (t.is_zero()) {
                return std::nullopt;
            }
            F ty = eval_xy(derivative(pc.den), x, y);
            F db = pc.b > 0 ? F(static_cast<long>(pc.b)) * field_pow(y, static_cast<unsigned>(pc.b - 1)) : F();
            F num = db * t - field_pow(y, static_cast<unsigned>(pc.b)) * ty;
            return field_pow(x, static_cast<unsigned>(pc.a)) * num / (t * t);
        };
        std::vector<std::vector<F>> erows;
        std::uniform_int_distribution<long> small(-40, 40);
        int attempts = 0;
        while (erows.size() < r + 4 && attempts < 100000) {
            ++attempts;
            const F x(small(rng));
            const F y(small(rng));
            const F fd = eval_xy(f.den(), x, y);
            if (fd.is_zero()) {
                continue;
            }
            std::vector<F> row(r + 1);
            bool ok = true;
            for (std::size_t i = 0; i < r && ok; ++i) {
                auto v = value(pieces[(*piv)[i]], x, y);
                ok = v.has_value();
                if (ok) {
                    row[i] = *v;
                }
            }
            if (!ok) {
                continue;
            }
            row[r] = eval_xy(f.num(), x, y) / fd;
            erows.push_back(std::move(row));
        }
        auto sol = solve_exact(std::move(erows), r);
        if (!sol) {
            continue;
        }
        // assemble numerators per (part, denominator)
        std::vector<std::tuple<bool, BiPoly<F>, BiPoly<F>>> groups;
        for (std::size_t i = 0; i < r; ++i) {
            const auto& pc = pieces[(*piv)[i]];
            if ((*sol)[i].is_zero()) {
                continue;
            }
            BiPoly<F> mono = bi_constant<F>((*sol)[i]) * pow(bi_x<F>(), static_cast<unsigned>(pc.a)) *
                             pow(bi_y<F>(), static_cast<unsigned>(pc.b));
            auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& gr) {
                return std::get<0>(gr) == pc.in_g && std::get<1>(gr) == pc.den;
            });
            if (it == groups.end()) {
                groups.emplace_back(pc.in_g, pc.den, mono);
            } else {
                std::get<2>(*it) = std::get<2>(*it) + mono;
            }
        }
        RatFunc<F> g, h;
        for (const auto& [in_g, den, num] : groups) {
            RatFunc<F> v(num, den);
            (in_g ? g : h) = (in_g ? g : h) + v;
        }
        if (verify_certificate(f, g, h, pair, ctx)) {
            return std::make_pair(std::move(g), std::move(h));
        }
    }
    return std::nullopt;
}

}  // namespace biexact

#endif
