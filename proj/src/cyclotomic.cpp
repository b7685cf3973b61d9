#include "biexact/cyclotomic.hpp"
#include "biexact/zassenhaus.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace biexact {

Poly<Rational> cyclotomic_polynomial(int m)
{
    if (m < 1) {
        throw std::invalid_argument("cyclotomic order must be positive");
    }
    Poly<Rational> p = Poly<Rational>::monomial(Rational(1), static_cast<std::size_t>(m)) - Poly<Rational>(1L);
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) {
            p = exact_divide(p, cyclotomic_polynomial(d));
        }
    }
    return p;
}

std::shared_ptr<const CyclotomicContext> make_cyclotomic_context(int m)
{
    auto ctx = std::make_shared<CyclotomicContext>();
    ctx->order = m;
    ctx->modulus = cyclotomic_polynomial(m);
    ctx->degree = ctx->modulus.degree();
    return ctx;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx, const Poly<Rational>& rep) : ctx_(std::move(ctx))
{
    rep_ = ctx_ ? divmod(rep, ctx_->modulus).second : rep;
}

Cyclotomic Cyclotomic::generator(std::shared_ptr<const CyclotomicContext> ctx)
{
    return Cyclotomic(ctx, Poly<Rational>::variable());
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    adopt(o);
    rep_ += o.rep_;
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o)
{
    adopt(o);
    rep_ -= o.rep_;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
    adopt(o);
    if (rep_.degree() <= 0 || o.rep_.degree() <= 0) {
        // scalar multiple of a reduced residue stays reduced
        rep_ = rep_ * o.rep_;
        return *this;
    }
    rep_ = divmod(rep_ * o.rep_, ctx_->modulus).second;
    return *this;
}

Cyclotomic Cyclotomic::inv() const
{
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (rep_.degree() == 0) {
        return Cyclotomic(ctx_, Poly<Rational>(rep_.lc().inv()), Reduced{});
    }
    return Cyclotomic(ctx_, inverse_mod(rep_, ctx_->modulus), Reduced{});
}

Cyclotomic Cyclotomic::galois(int k) const
{
    if (rep_.degree() <= 0) {
        return *this;
    }
    if (std::gcd(k, ctx_->order) != 1) {
        throw std::invalid_argument("galois exponent must be coprime to the order");
    }
    int e = ((k % ctx_->order) + ctx_->order) % ctx_->order;
    Poly<Rational> tk = Poly<Rational>::monomial(Rational(1), static_cast<std::size_t>(e));
    return Cyclotomic(ctx_, compose(rep_, divmod(tk, ctx_->modulus).second));
}

}  // namespace biexact

namespace biexact {

namespace {

using Zp = std::uint64_t;

Zp pow_mod(Zp b, Zp e, Zp p)
{
    Zp r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1U) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1U;
    }
    return r;
}

}  // namespace

std::vector<std::uint64_t> primitive_roots(int m, std::uint64_t p)
{
    std::vector<int> primes;
    for (int l = 2, r = m; l <= r; ++l) {
        if (r % l == 0) {
            primes.push_back(l);
            while (r % l == 0) {
                r /= l;
            }
        }
    }
    for (Zp a = 2;; ++a) {
        Zp z = pow_mod(a, (p - 1) / static_cast<Zp>(m), p);
        bool primitive = z != 0;
        for (int l : primes) {
            primitive = primitive && pow_mod(z, static_cast<Zp>(m / l), p) != 1;
        }
        if (primitive) {
            std::vector<Zp> out;
            for (int k = 1; k <= m; ++k) {
                if (std::gcd(k, m) == 1) {
                    out.push_back(pow_mod(z, static_cast<Zp>(k), p));
                }
            }
            return out;
        }
    }
}

std::uint64_t prime_one_mod(int m, std::uint64_t below)
{
    const auto mm = static_cast<std::uint64_t>(m);
    for (std::uint64_t p = below - 1 - ((below - 2) % mm); p > mm; p -= mm) {
        mpz_class pz = static_cast<unsigned long>(p);
        if (mpz_probab_prime_p(pz.get_mpz_t(), 25) != 0) {
            return p;
        }
    }
    throw std::runtime_error("no prime found");
}

namespace {

// Integer coordinates of p over Z[zeta] with a common denominator removed.
std::vector<std::vector<mpz_class>> integer_coords(const Poly<Cyclotomic>& f, int phi)
{
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) {
        for (const auto& r : c.rep().coeffs()) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den().get_mpz_t());
        }
    }
    std::vector<std::vector<mpz_class>> out;
    for (const auto& c : f.coeffs()) {
        std::vector<mpz_class> v(static_cast<std::size_t>(phi));
        for (std::size_t j = 0; j < c.rep().size(); ++j) {
            const Rational& r = c.rep().coeffs()[j];
            v[j] = r.num() * (l / r.den());
        }
        out.push_back(std::move(v));
    }
    return out;
}

ZpPoly image(const std::vector<std::vector<mpz_class>>& f, Zp root, Zp p)
{
    ZpPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Zp acc = 0;
        for (std::size_t j = f[i].size(); j-- > 0;) {
            acc = (acc * root + mpz_fdiv_ui(f[i][j].get_mpz_t(), p)) % p;
        }
        out[i] = acc;
    }
    return zp::trim(std::move(out));
}

// Solves sum_j c_j roots[k]^j = v[k] mod p.
std::vector<Zp> vandermonde_solve(const std::vector<Zp>& roots, const std::vector<Zp>& v, Zp p)
{
    const std::size_t n = roots.size();
    std::vector<std::vector<Zp>> a(n, std::vector<Zp>(n + 1));
    for (std::size_t k = 0; k < n; ++k) {
        Zp pw = 1;
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] = pw;
            pw = pw * roots[k] % p;
        }
        a[k][n] = v[k];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (a[piv][c] == 0) {
            ++piv;
        }
        std::swap(a[piv], a[c]);
        const Zp iv = zp::inv(a[c][c], p);
        for (auto& x : a[c]) {
            x = x * iv % p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && a[r][c] != 0) {
                const Zp f = a[r][c];
                for (std::size_t j = c; j <= n; ++j) {
                    a[r][j] = (a[r][j] + p - f * a[c][j] % p) % p;
                }
            }
        }
    }
    std::vector<Zp> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = a[k][n];
    }
    return out;
}

// n/d = u mod m with |n|, d <= sqrt(m/2).
std::optional<Rational> rational_reconstruction(const mpz_class& u, const mpz_class& m)
{
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound) {
        return std::nullopt;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) {
        return std::nullopt;
    }
    return Rational(r1, t1);
}

}  // namespace

Poly<Cyclotomic> gcd(const Poly<Cyclotomic>& a, const Poly<Cyclotomic>& b)
{
    if (a.is_zero()) {
        return make_monic(b);
    }
    if (b.is_zero()) {
        return make_monic(a);
    }
    if (a.degree() == 0 || b.degree() == 0) {
        return Poly<Cyclotomic>(1L);
    }
    std::shared_ptr<const CyclotomicContext> ctx;
    for (const auto* f : {&a, &b}) {
        for (const auto& c : f->coeffs()) {
            if (!ctx && c.context()) {
                ctx = c.context();
            }
        }
    }
    bool rational = true;
    for (const auto* f : {&a, &b}) {
        for (const auto& c : f->coeffs()) {
            rational = rational && c.is_rational();
        }
    }
    if (rational) {
        auto down = [](const Poly<Cyclotomic>& f) {
            std::vector<Rational> v;
            for (const auto& c : f.coeffs()) {
                v.push_back(c.rep().coeff(0));
            }
            return Poly<Rational>(std::move(v));
        };
        const Poly<Rational> g = gcd(down(a), down(b));
        std::vector<Cyclotomic> v;
        for (const auto& c : g.coeffs()) {
            v.emplace_back(c);
        }
        return Poly<Cyclotomic>(std::move(v));
    }
    const int m = ctx->order;
    const int phi = ctx->degree;
    const auto A = integer_coords(a, phi);
    const auto B = integer_coords(b, phi);
    int deg = std::min(a.degree(), b.degree()) + 1;
    std::vector<std::vector<mpz_class>> acc;
    mpz_class modulus = 1;
    std::optional<Poly<Cyclotomic>> last;
    Zp p = 2147483647ULL - (2147483647ULL % static_cast<Zp>(m)) + 1;
    for (;; p -= static_cast<Zp>(m)) {
        mpz_class pz = static_cast<unsigned long>(p);
        if (mpz_probab_prime_p(pz.get_mpz_t(), 25) == 0) {
            continue;
        }
        const std::vector<Zp> roots = primitive_roots(m, p);
        std::vector<ZpPoly> images;
        bool bad = false;
        int dk = -1;
        for (Zp r : roots) {
            ZpPoly ia = image(A, r, p);
            ZpPoly ib = image(B, r, p);
            if (ia.size() != A.size() || ib.size() != B.size()) {
                bad = true;
                break;
            }
            ZpPoly g = zp::gcd(ia, ib, p);
            if (dk >= 0 && static_cast<int>(g.size()) - 1 != dk) {
                bad = true;
                break;
            }
            dk = static_cast<int>(g.size()) - 1;
            images.push_back(std::move(g));
        }
        if (bad || dk > deg) {
            continue;
        }
        if (dk == 0) {
            return Poly<Cyclotomic>(1L);
        }
        std::vector<std::vector<Zp>> coords;
        for (int i = 0; i <= dk; ++i) {
            std::vector<Zp> v;
            for (const auto& g : images) {
                v.push_back(g[static_cast<std::size_t>(i)]);
            }
            coords.push_back(vandermonde_solve(roots, v, p));
        }
        if (dk < deg) {
            deg = dk;
            acc.assign(static_cast<std::size_t>(dk + 1), std::vector<mpz_class>(static_cast<std::size_t>(phi)));
            for (int i = 0; i <= dk; ++i) {
                for (int j = 0; j < phi; ++j) {
                    acc[i][j] = static_cast<unsigned long>(coords[i][j]);
                }
            }
            modulus = pz;
            last.reset();
        } else {
            const Zp minv = zp::inv(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
            for (int i = 0; i <= dk; ++i) {
                for (int j = 0; j < phi; ++j) {
                    const Zp ai = mpz_fdiv_ui(acc[i][j].get_mpz_t(), p);
                    const Zp t = (coords[i][j] + p - ai) % p * minv % p;
                    acc[i][j] += modulus * static_cast<unsigned long>(t);
                }
            }
            modulus *= pz;
        }
        std::vector<Cyclotomic> cand;
        bool ok = true;
        for (int i = 0; i <= dk && ok; ++i) {
            std::vector<Rational> rep;
            for (int j = 0; j < phi && ok; ++j) {
                auto r = rational_reconstruction(acc[i][j], modulus);
                ok = r.has_value();
                if (ok) {
                    rep.push_back(*r);
                }
            }
            if (ok) {
                cand.emplace_back(ctx, Poly<Rational>(std::move(rep)));
            }
        }
        if (!ok) {
            continue;
        }
        Poly<Cyclotomic> g(std::move(cand));
        if (last && *last == g && try_divide(a, g) && try_divide(b, g)) {
            return g;
        }
        last = std::move(g);
    }
}

}  // namespace biexact
