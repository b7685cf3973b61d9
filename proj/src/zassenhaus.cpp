#include "biexact/zassenhaus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace biexact {

namespace zp {

ZpPoly trim(ZpPoly a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
    return a;
}

ZpPoly add(const ZpPoly& a, const ZpPoly& b, std::uint64_t p)
{
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + y) % p;
    }
    return trim(std::move(r));
}

ZpPoly sub(const ZpPoly& a, const ZpPoly& b, std::uint64_t p)
{
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    return trim(std::move(r));
}

ZpPoly mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return trim(std::move(r));
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p)
{
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) {
        throw std::domain_error("not invertible mod p");
    }
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& a, const ZpPoly& b, std::uint64_t p)
{
    if (b.empty()) {
        throw std::domain_error("division by zero polynomial");
    }
    if (a.size() < b.size()) {
        return {{}, a};
    }
    ZpPoly r = a;
    ZpPoly q(a.size() - b.size() + 1, 0);
    const std::uint64_t il = inv(b.back(), p);
    for (std::size_t k = q.size(); k-- > 0;) {
        std::uint64_t c = r[k + b.size() - 1] * il % p;
        q[k] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            r[k + i] = (r[k + i] + p - c * b[i] % p) % p;
        }
    }
    r.resize(b.size() - 1);
    return {trim(std::move(q)), trim(std::move(r))};
}

ZpPoly make_monic(const ZpPoly& a, std::uint64_t p)
{
    if (a.empty() || a.back() == 1) {
        return a;
    }
    std::uint64_t il = inv(a.back(), p);
    ZpPoly r = a;
    for (auto& c : r) {
        c = c * il % p;
    }
    return r;
}

ZpPoly gcd(ZpPoly a, ZpPoly b, std::uint64_t p)
{
    while (!b.empty()) {
        ZpPoly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

ZpPoly powmod(ZpPoly base, mpz_class e, const ZpPoly& m, std::uint64_t p)
{
    ZpPoly r{1};
    base = divmod(base, m, p).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            r = divmod(mul(r, base, p), m, p).second;
        }
        e >>= 1;
        if (e > 0) {
            base = divmod(mul(base, base, p), m, p).second;
        }
    }
    return r;
}

namespace {

// Splits a product of irreducibles of common degree d (Cantor-Zassenhaus).
void equal_degree(const ZpPoly& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<ZpPoly>& out)
{
    const int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
        ZpPoly a(static_cast<std::size_t>(n), 0);
        for (auto& c : a) {
            c = dist(rng);
        }
        a = trim(std::move(a));
        if (a.size() < 2) {
            continue;
        }
        ZpPoly g = gcd(a, f, p);
        if (g.size() > 1 && g.size() < f.size()) {
            equal_degree(g, d, p, rng, out);
            equal_degree(divmod(f, g, p).first, d, p, rng, out);
            return;
        }
        ZpPoly b = sub(powmod(a, e, f, p), ZpPoly{1}, p);
        g = gcd(b, f, p);
        if (g.size() > 1 && g.size() < f.size()) {
            equal_degree(g, d, p, rng, out);
            equal_degree(make_monic(divmod(f, g, p).first, p), d, p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<ZpPoly> factor_squarefree(const ZpPoly& f0, std::uint64_t p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<ZpPoly> out;
    ZpPoly f = make_monic(f0, p);
    const ZpPoly x{0, 1};
    ZpPoly h = x;
    int d = 0;
    while (f.size() > 1) {
        ++d;
        if (2 * d > static_cast<int>(f.size()) - 1) {
            out.push_back(f);
            break;
        }
        h = powmod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
        ZpPoly g = gcd(sub(h, x, p), f, p);
        if (g.size() > 1) {
            equal_degree(g, d, p, rng, out);
            f = divmod(f, g, p).first;
            h = divmod(h, f, p).second;
        }
    }
    return out;
}

}  // namespace zp

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

ZpPoly reduce(const ZPoly& f, std::uint64_t p)
{
    ZpPoly r(f.size());
    mpz_class t;
    for (std::size_t i = 0; i < f.size(); ++i) {
        mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
        r[i] = t.get_ui();
    }
    return zp::trim(std::move(r));
}

ZPoly lift_coeffs(const ZpPoly& f)
{
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        r[i] = static_cast<unsigned long>(f[i]);
    }
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    ztrim(r);
    return r;
}

void zmod(ZPoly& a, const mpz_class& m)
{
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    ztrim(a);
}

void symmetric(ZPoly& a, const mpz_class& m)
{
    const mpz_class half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) {
            c -= m;
        }
    }
    ztrim(a);
}

// Exact division over Z; nullopt if b does not divide a.
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b)
{
    if (a.size() < b.size()) {
        return std::nullopt;
    }
    ZPoly r = a;
    ZPoly q(a.size() - b.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        const mpz_class& top = r[k + b.size() - 1];
        if (top == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) {
            return std::nullopt;
        }
        mpz_class c = top / b.back();
        for (std::size_t i = 0; i < b.size(); ++i) {
            r[k + i] -= c * b[i];
        }
        q[k] = c;
    }
    for (const auto& c : r) {
        if (c != 0) {
            return std::nullopt;
        }
    }
    ztrim(q);
    return q;
}

ZPoly primitive(ZPoly a)
{
    mpz_class g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (a.back() < 0) {
        g = -g;
    }
    for (auto& c : a) {
        c /= g;
    }
    return a;
}

// Lifts f = g h mod p (g monic) to f = g h mod p^k; lc(h) = lc(f).
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, std::uint64_t p, const mpz_class& target)
{
    ZpPoly gp = reduce(g, p);
    ZpPoly hp = reduce(h, p);
    // s g + t h = 1 mod p
    ZpPoly r0 = gp, r1 = hp, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = zp::divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        ZpPoly s2 = zp::sub(s0, zp::mul(q, s1, p), p);
        ZpPoly t2 = zp::sub(t0, zp::mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) {
        throw std::logic_error("hensel lifting: factors not coprime mod p");
    }
    const std::uint64_t il = zp::inv(r0[0], p);
    for (auto& c : s0) {
        c = c * il % p;
    }
    for (auto& c : t0) {
        c = c * il % p;
    }
    mpz_class pk = p;
    while (pk < target) {
        ZPoly e = zmul(g, h);
        e.resize(std::max(e.size(), f.size()));
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = (i < f.size() ? f[i] : mpz_class(0)) - e[i];
        }
        ztrim(e);
        for (auto& c : e) {
            c /= pk;  // exact
        }
        ZpPoly ep = reduce(e, p);
        // g dh + h dg = e mod p, deg dg < deg g
        ZpPoly dg = zp::divmod(zp::mul(t0, ep, p), gp, p).second;
        ZpPoly dh = zp::divmod(zp::sub(ep, zp::mul(hp, dg, p), p), gp, p).first;
        ZPoly dgz = lift_coeffs(dg);
        ZPoly dhz = lift_coeffs(dh);
        g.resize(std::max(g.size(), dgz.size()));
        for (std::size_t i = 0; i < dgz.size(); ++i) {
            g[i] += pk * dgz[i];
        }
        h.resize(std::max(h.size(), dhz.size()));
        for (std::size_t i = 0; i < dhz.size(); ++i) {
            h[i] += pk * dhz[i];
        }
        pk *= p;
        zmod(g, pk);
        zmod(h, pk);
    }
}

// Lifts f = lc(f) prod fs (fs monic mod p) to monic factors mod p^k.
void hensel_multi(const ZPoly& f, const std::vector<ZpPoly>& fs, std::uint64_t p, const mpz_class& target,
                  std::vector<ZPoly>& out)
{
    if (fs.size() == 1) {
        // f * lc^-1 mod p^k
        mpz_class pk = 1;
        while (pk < target) {
            pk *= p;
        }
        mpz_class il;
        mpz_invert(il.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
        ZPoly g = f;
        for (auto& c : g) {
            c *= il;
        }
        zmod(g, pk);
        out.push_back(std::move(g));
        return;
    }
    const std::size_t half = fs.size() / 2;
    std::vector<ZpPoly> left(fs.begin(), fs.begin() + static_cast<long>(half));
    std::vector<ZpPoly> right(fs.begin() + static_cast<long>(half), fs.end());
    ZpPoly gp{1};
    for (const auto& x : left) {
        gp = zp::mul(gp, x, p);
    }
    ZpPoly hp{static_cast<std::uint64_t>(mpz_fdiv_ui(f.back().get_mpz_t(), p))};
    for (const auto& x : right) {
        hp = zp::mul(hp, x, p);
    }
    ZPoly g = lift_coeffs(gp);
    ZPoly h = lift_coeffs(hp);
    hensel_pair(f, g, h, p, target);
    hensel_multi(g, left, p, target, out);
    hensel_multi(h, right, p, target, out);
}

bool is_prime(std::uint64_t n)
{
    mpz_class z = static_cast<unsigned long>(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

// Visits k-subsets of {0..n-1} in lexicographic order until fn returns true.
bool for_each_subset(std::size_t n, std::size_t k, auto&& fn)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
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

}  // namespace

std::vector<std::vector<mpz_class>> factor_squarefree_integer(const std::vector<mpz_class>& f0)
{
    ZPoly f = primitive(f0);
    ztrim(f);
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) {
        return {f};
    }
    // pick the good prime with the fewest modular factors
    std::uint64_t best_p = 0;
    std::vector<ZpPoly> best;
    int tried = 0;
    for (std::uint64_t p = 1009; tried < 5; p += 2) {
        if (!is_prime(p) || mpz_divisible_ui_p(f.back().get_mpz_t(), p)) {
            continue;
        }
        ZpPoly fp = reduce(f, p);
        ZpPoly d;
        for (std::size_t i = 1; i < fp.size(); ++i) {
            d.push_back(fp[i] * i % p);
        }
        if (zp::gcd(fp, zp::trim(d), p).size() != 1) {
            continue;
        }
        ++tried;
        auto fs = zp::factor_squarefree(fp, p, p);
        if (best_p == 0 || fs.size() < best.size()) {
            best_p = p;
            best = std::move(fs);
        }
        if (best.size() == 1) {
            break;
        }
    }
    if (best.size() == 1) {
        return {f};
    }
    // coefficient bound for lc * (factor)
    mpz_class norm2 = 0;
    for (const auto& c : f) {
        norm2 += c * c;
    }
    mpz_class norm = sqrt(norm2) + 1;
    mpz_class bound = norm * abs(f.back()) * 2;
    bound <<= static_cast<unsigned long>(n);
    std::vector<ZPoly> lifted;
    const std::uint64_t p = best_p;
    hensel_multi(f, best, p, bound, lifted);
    mpz_class pk = 1;
    while (pk < bound) {
        pk *= p;
    }

    std::vector<ZPoly> found;
    std::size_t k = 1;
    while (2 * k <= lifted.size()) {
        const bool hit = for_each_subset(lifted.size(), k, [&](const std::vector<std::size_t>& idx) {
            ZPoly g{f.back()};
            for (std::size_t i : idx) {
                g = zmul(g, lifted[i]);
                symmetric(g, pk);
            }
            g = primitive(g);
            auto q = zdivide(f, g);
            if (!q) {
                return false;
            }
            found.push_back(g);
            f = primitive(*q);
            std::vector<ZPoly> rest;
            for (std::size_t i = 0; i < lifted.size(); ++i) {
                if (std::find(idx.begin(), idx.end(), i) == idx.end()) {
                    rest.push_back(std::move(lifted[i]));
                }
            }
            lifted = std::move(rest);
            return true;
        });
        if (!hit) {
            ++k;
        }
    }
    found.push_back(f);
    return found;
}

std::vector<Poly<Rational>> factor_squarefree_rational(const Poly<Rational>& f)
{
    if (f.degree() <= 0) {
        throw std::invalid_argument("factor_squarefree_rational: constant polynomial");
    }
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    ZPoly z;
    for (const auto& c : f.coeffs()) {
        z.push_back(c.num() * (l / c.den()));
    }
    std::vector<Poly<Rational>> out;
    for (const auto& g : factor_squarefree_integer(z)) {
        std::vector<Rational> c;
        for (const auto& x : g) {
            c.emplace_back(x);
        }
        out.push_back(make_monic(Poly<Rational>(std::move(c))));
    }
    return out;
}

}  // namespace biexact

namespace biexact {

namespace {

// Primitive integer multiple of f.
ZPoly to_primitive_integer(const Poly<Rational>& f)
{
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    ZPoly z;
    z.reserve(f.size());
    for (const auto& c : f.coeffs()) {
        z.push_back(c.num() * (l / c.den()));
    }
    return primitive(std::move(z));
}

Poly<Rational> monic_rational(const ZPoly& z)
{
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& x : z) {
        c.emplace_back(x, z.back());
    }
    return Poly<Rational>(std::move(c));
}

}  // namespace

Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b)
{
    if (a.is_zero()) {
        return make_monic(b);
    }
    if (b.is_zero()) {
        return make_monic(a);
    }
    if (a.degree() == 0 || b.degree() == 0) {
        return Poly<Rational>(1L);
    }
    const ZPoly A = to_primitive_integer(a);
    const ZPoly B = to_primitive_integer(b);
    mpz_class gam;
    mpz_gcd(gam.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
    int deg = static_cast<int>(std::min(A.size(), B.size()));
    ZPoly acc;
    mpz_class modulus = 1;
    ZPoly last;
    std::uint64_t p = 2147483647ULL;
    for (;; p -= 2) {
        if (!is_prime(p)) {
            continue;
        }
        if (mpz_divisible_ui_p(A.back().get_mpz_t(), p) || mpz_divisible_ui_p(B.back().get_mpz_t(), p)) {
            continue;
        }
        ZpPoly g = zp::gcd(reduce(A, p), reduce(B, p), p);
        const int dg = static_cast<int>(g.size()) - 1;
        if (dg == 0) {
            return Poly<Rational>(1L);
        }
        if (dg > deg) {
            continue;
        }
        const std::uint64_t gp = mpz_fdiv_ui(gam.get_mpz_t(), p);
        for (auto& c : g) {
            c = c * gp % p;
        }
        if (dg < deg) {
            deg = dg;
            acc = lift_coeffs(g);
            modulus = static_cast<unsigned long>(p);
        } else {
            // CRT: x = acc mod modulus, x = g mod p
            const mpz_class pz = static_cast<unsigned long>(p);
            const std::uint64_t minv = zp::inv(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                const std::uint64_t ai = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
                const std::uint64_t t = (g[i] + p - ai) % p * minv % p;
                acc[i] += modulus * static_cast<unsigned long>(t);
            }
            modulus *= pz;
        }
        ZPoly cand = acc;
        symmetric(cand, modulus);
        if (cand == last) {
            ZPoly prim = primitive(cand);
            if (zdivide(A, prim) && zdivide(B, prim)) {
                return monic_rational(prim);
            }
        }
        last = std::move(cand);
    }
}

}  // namespace biexact
