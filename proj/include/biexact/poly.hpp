#ifndef BIEXACT_POLY_HPP
#define BIEXACT_POLY_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "biexact/errors.hpp"

namespace biexact {

template <class R>
class Poly;

template <class R>
struct scalar_of {
    using type = R;
};
template <class R>
struct scalar_of<Poly<R>> {
    using type = typename scalar_of<R>::type;
};
/// Innermost coefficient field of a (possibly nested) polynomial ring.
template <class R>
using scalar_t = typename scalar_of<R>::type;

template <class T>
concept Field = T::is_field;

/// Dense univariate polynomial with coefficients in a commutative ring R.
///
/// Coefficients are stored in increasing degree and trimmed so that the
/// leading coefficient is nonzero; the zero polynomial has no coefficients.
/// R is either a field (Rational, RatFunc1, Cyclotomic) or another Poly, which
/// gives the recursive bivariate representation used throughout.
template <class R>
class Poly {
public:
    using coeff_type = R;
    static constexpr bool is_field = false;

    Poly() = default;
    explicit Poly(long c)
    {
        if (c != 0) {
            c_.emplace_back(c);
        }
    }
    explicit Poly(R c)
    {
        if (!c.is_zero()) {
            c_.push_back(std::move(c));
        }
    }
    explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }

    static Poly monomial(R c, std::size_t k)
    {
        if (c.is_zero()) {
            return Poly();
        }
        std::vector<R> v(k + 1);
        v[k] = std::move(c);
        Poly p;
        p.c_ = std::move(v);
        return p;
    }
    static Poly variable() { return monomial(R(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == R(1); }
    bool is_constant() const { return c_.size() <= 1; }
    const R& lc() const
    {
        assert(!c_.empty());
        return c_.back();
    }
    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(); }
    const std::vector<R>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }

    void set_coeff(std::size_t i, R v)
    {
        if (i >= c_.size()) {
            if (v.is_zero()) {
                return;
            }
            c_.resize(i + 1);
        }
        c_[i] = std::move(v);
        trim();
    }

    /// Constant polynomials that are integers.
    std::optional<long> as_integer() const
    {
        if (c_.empty()) {
            return 0L;
        }
        if (c_.size() > 1) {
            return std::nullopt;
        }
        return c_[0].as_integer();
    }

    Poly operator-() const
    {
        Poly r(*this);
        for (auto& c : r.c_) {
            c = -c;
        }
        return r;
    }
    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Poly();
        }
        std::vector<R> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(r));
    }

    /// Multiplication by an element of the coefficient ring.
    Poly scaled(const R& s) const
    {
        if (s.is_zero()) {
            return Poly();
        }
        Poly r(*this);
        for (auto& c : r.c_) {
            c *= s;
        }
        r.trim();
        return r;
    }

    /// Multiplication by t^k.
    Poly shifted_up(std::size_t k) const
    {
        if (is_zero() || k == 0) {
            return *this;
        }
        Poly r;
        r.c_.assign(k, R());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Degree first, then coefficients from the top.
    friend int compare(const Poly& a, const Poly& b)
    {
        if (a.c_.size() != b.c_.size()) {
            return a.c_.size() < b.c_.size() ? -1 : 1;
        }
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            int c = compare(a.c_[i], b.c_[i]);
            if (c != 0) {
                return c;
            }
        }
        return 0;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<R> c_;
};

template <class R>
Poly<R> pow(const Poly<R>& p, unsigned k)
{
    Poly<R> result(1L);
    Poly<R> base = p;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

template <Field F>
F field_pow(const F& a, unsigned k)
{
    F r(1L);
    F base = a;
    while (k > 0) {
        if (k & 1U) {
            r = r * base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return r;
}

template <class R>
Poly<R> derivative(const Poly<R>& p)
{
    if (p.degree() <= 0) {
        return Poly<R>();
    }
    std::vector<R> r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) {
        r[i - 1] = p.coeffs()[i] * R(static_cast<long>(i));
    }
    return Poly<R>(std::move(r));
}

template <class R>
R eval(const Poly<R>& p, const R& x)
{
    R acc;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p.coeffs()[i];
    }
    return acc;
}

/// p(t + c), by repeated synthetic division.
template <class R>
Poly<R> taylor_shift(const Poly<R>& p, const R& c)
{
    if (c.is_zero() || p.degree() <= 0) {
        return p;
    }
    std::vector<R> a = p.coeffs();
    const std::size_t n = a.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = n - 1;; --j) {
            a[j] += c * a[j + 1];
            if (j == i) {
                break;
            }
        }
    }
    return Poly<R>(std::move(a));
}

/// p(s t).
template <class R>
Poly<R> scale_var(const Poly<R>& p, const R& s)
{
    std::vector<R> a = p.coeffs();
    R power(1L);
    for (std::size_t i = 1; i < a.size(); ++i) {
        power = power * s;
        a[i] = a[i] * power;
    }
    return Poly<R>(std::move(a));
}

/// p(q(t)).
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q)
{
    Poly<R> acc;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * q + Poly<R>(p.coeffs()[i]);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Scalars of nested rings.

/// True for elements of the innermost coefficient field.
template <Field F>
bool is_scalar(const F&)
{
    return true;
}

template <class R>
bool is_scalar(const Poly<R>& p)
{
    return p.degree() <= 0 && (p.is_zero() || is_scalar(p.lc()));
}

template <Field F>
const F& leading_scalar(const F& a)
{
    return a;
}

template <class R>
const scalar_t<R>& leading_scalar(const Poly<R>& p)
{
    return leading_scalar(p.lc());
}

template <Field F>
F scale_scalar(const F& a, const F& s)
{
    return a * s;
}

template <class R>
Poly<R> scale_scalar(const Poly<R>& p, const scalar_t<R>& s)
{
    std::vector<R> c;
    c.reserve(p.size());
    for (const auto& x : p.coeffs()) {
        c.push_back(scale_scalar(x, s));
    }
    return Poly<R>(std::move(c));
}

/// Scales so that the leading scalar (lexicographic, outer variable first) is 1.
template <class R>
Poly<R> make_monic(const Poly<R>& p)
{
    if (p.is_zero()) {
        return p;
    }
    const auto& s = leading_scalar(p);
    if (s.is_one()) {
        return p;
    }
    return scale_scalar(p, s.inv());
}

// ---------------------------------------------------------------------------
// Division.

template <Field F>
std::optional<F> try_divide(const F& a, const F& b)
{
    if (b.is_zero()) {
        return std::nullopt;
    }
    return a / b;
}

/// Exact division a / b; nullopt when b does not divide a.
template <class R>
std::optional<Poly<R>> try_divide(const Poly<R>& a, const Poly<R>& b)
{
    if (b.is_zero()) {
        throw ZeroDenominator();
    }
    if (a.is_zero()) {
        return Poly<R>();
    }
    if (a.degree() < b.degree()) {
        return std::nullopt;
    }
    std::vector<R> r = a.coeffs();
    std::vector<R> q(a.size() - b.size() + 1);
    const int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
        const R& top = r[static_cast<std::size_t>(k + db)];
        if (top.is_zero()) {
            continue;
        }
        auto c = try_divide(top, b.lc());
        if (!c) {
            return std::nullopt;
        }
        for (int i = 0; i <= db; ++i) {
            r[static_cast<std::size_t>(k + i)] -= *c * b.coeffs()[static_cast<std::size_t>(i)];
        }
        q[static_cast<std::size_t>(k)] = std::move(*c);
    }
    for (int i = 0; i < db; ++i) {
        if (!r[static_cast<std::size_t>(i)].is_zero()) {
            return std::nullopt;
        }
    }
    return Poly<R>(std::move(q));
}

template <class R>
Poly<R> exact_divide(const Poly<R>& a, const Poly<R>& b)
{
    auto q = try_divide(a, b);
    if (!q) {
        throw std::logic_error("exact_divide: divisor does not divide dividend");
    }
    return std::move(*q);
}

template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b)
{
    if (b.is_zero()) {
        throw ZeroDenominator();
    }
    if (a.degree() < b.degree()) {
        return {Poly<F>(), a};
    }
    std::vector<F> r = a.coeffs();
    std::vector<F> q(a.size() - b.size() + 1);
    const int db = b.degree();
    const F inv_lc = b.lc().inv();
    for (int k = a.degree() - db; k >= 0; --k) {
        const F& top = r[static_cast<std::size_t>(k + db)];
        if (top.is_zero()) {
            continue;
        }
        F c = top * inv_lc;
        for (int i = 0; i <= db; ++i) {
            r[static_cast<std::size_t>(k + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
        }
        q[static_cast<std::size_t>(k)] = std::move(c);
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <Field F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b)
{
    return divmod(a, b).second;
}

/// lc(b)^(deg a - deg b + 1) a mod b, computed without divisions.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b)
{
    if (b.is_zero()) {
        throw ZeroDenominator();
    }
    Poly<R> r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const R lr = r.lc();
        const std::size_t k = static_cast<std::size_t>(r.degree() - db);
        r = r.scaled(b.lc()) - b.scaled(lr).shifted_up(k);
    }
    return r;
}

/// (q, r) with lc(b)^(deg a - deg b + 1) a = q b + r, deg r < deg b.
template <class R>
std::pair<Poly<R>, Poly<R>> pseudo_divmod(const Poly<R>& a, const Poly<R>& b)
{
    if (b.is_zero()) {
        throw ZeroDenominator();
    }
    const int db = b.degree();
    if (a.degree() < db) {
        return {Poly<R>(), a};
    }
    const R& l = b.lc();
    Poly<R> q;
    Poly<R> r = a;
    for (int k = a.degree() - db; k >= 0; --k) {
        q = q.scaled(l);
        if (r.degree() == k + db) {
            const R t = r.lc();
            q = q + Poly<R>(t).shifted_up(static_cast<std::size_t>(k));
            r = r.scaled(l) - b.scaled(t).shifted_up(static_cast<std::size_t>(k));
        } else {
            r = r.scaled(l);
        }
    }
    return {std::move(q), std::move(r)};
}

// ---------------------------------------------------------------------------
// GCD.

template <class R>
Poly<R> gcd(const Poly<R>& a, const Poly<R>& b);

class Rational;
/// Modular gcd over Q, normalized monic.
Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b);

/// Gcd of the coefficients of p, normalized; p must be a polynomial over a
/// polynomial ring.
template <class R>
R content(const Poly<R>& p)
{
    R g;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) {
            continue;
        }
        g = gcd(g, c);
        if (g.degree() == 0) {
            break;
        }
    }
    return g;
}

template <class R>
Poly<R> primitive_part(const Poly<R>& p)
{
    if (p.is_zero()) {
        return p;
    }
    if constexpr (R::is_field) {
        return make_monic(p);
    } else {
        R c = content(p);
        if (c.degree() == 0) {
            return make_monic(p);
        }
        std::vector<R> q;
        q.reserve(p.size());
        for (const auto& x : p.coeffs()) {
            q.push_back(exact_divide(x, c));
        }
        return make_monic(Poly<R>(std::move(q)));
    }
}

/// Normalized greatest common divisor (leading scalar 1). Euclid over a field,
/// primitive remainder sequence over a polynomial ring.
template <class R>
Poly<R> gcd(const Poly<R>& a, const Poly<R>& b)
{
    if (a.is_zero()) {
        return make_monic(b);
    }
    if (b.is_zero()) {
        return make_monic(a);
    }
    if constexpr (R::is_field) {
        Poly<R> x = a;
        Poly<R> y = b;
        while (!y.is_zero()) {
            Poly<R> r = divmod(x, y).second;
            x = std::move(y);
            y = std::move(r);
        }
        return make_monic(x);
    } else {
        R ca = content(a);
        R cb = content(b);
        R c = gcd(ca, cb);
        Poly<R> x = primitive_part(a);
        Poly<R> y = primitive_part(b);
        if (x.degree() < y.degree()) {
            std::swap(x, y);
        }
        while (!y.is_zero()) {
            if (y.degree() == 0) {
                x = Poly<R>(1L);
                break;
            }
            Poly<R> r = pseudo_remainder(x, y);
            x = std::move(y);
            y = primitive_part(r);
        }
        return make_monic(primitive_part(x).scaled(c));
    }
}

namespace detail {

template <Field F>
Poly<F> eval_inner(const Poly<Poly<F>>& p, const F& a)
{
    std::vector<F> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        out.push_back(eval(c, a));
    }
    return Poly<F>(std::move(out));
}

template <Field F>
F eval_point(long k)
{
    // 0, 1, -1, 2, -2, ...
    return F(k % 2 == 1 ? (k + 1) / 2 : -(k / 2));
}

}  // namespace detail

/// Gcd in F[x][y] by evaluating x at small integers, taking univariate gcds in
/// y and interpolating; each candidate is confirmed by trial division.
template <Field F>
Poly<Poly<F>> gcd(const Poly<Poly<F>>& a, const Poly<Poly<F>>& b)
{
    using P = Poly<Poly<F>>;
    if (a.is_zero()) {
        return make_monic(b);
    }
    if (b.is_zero()) {
        return make_monic(a);
    }
    Poly<F> ca = content(a);
    Poly<F> cb = content(b);
    Poly<F> c = gcd(ca, cb);
    auto strip = [](const P& p, const Poly<F>& cp) {
        std::vector<Poly<F>> q;
        q.reserve(p.size());
        for (const auto& x : p.coeffs()) {
            q.push_back(exact_divide(x, cp));
        }
        return P(std::move(q));
    };
    const P A = ca.degree() == 0 ? a : strip(a, ca);
    const P B = cb.degree() == 0 ? b : strip(b, cb);
    if (A.degree() == 0 || B.degree() == 0) {
        return make_monic(P(c));
    }
    const Poly<F> gam = gcd(A.lc(), B.lc());
    auto deg_x = [](const P& p) {
        int d = 0;
        for (const auto& x : p.coeffs()) {
            d = std::max(d, x.degree());
        }
        return d;
    };
    const int bound = gam.degree() + std::min(deg_x(A), deg_x(B));
    const Poly<F> x_var(std::vector<F>{F(0L), F(1L)});
    int dy = std::min(A.degree(), B.degree()) + 1;
    P H;
    Poly<F> M(1L);
    int count = 0;
    for (long k = 0;; ++k) {
        const F pt = detail::eval_point<F>(k);
        if (eval(A.lc(), pt).is_zero() || eval(B.lc(), pt).is_zero()) {
            continue;
        }
        Poly<F> ga = gcd(detail::eval_inner(A, pt), detail::eval_inner(B, pt));
        if (ga.degree() == 0) {
            return make_monic(P(c));
        }
        if (ga.degree() > dy) {
            continue;
        }
        if (ga.degree() < dy) {
            dy = ga.degree();
            H = P();
            M = Poly<F>(1L);
            count = 0;
        }
        ga = ga.scaled(eval(gam, pt));
        Poly<F> diff = ga - detail::eval_inner(H, pt);
        if (!diff.is_zero()) {
            const F s = eval(M, pt).inv();
            std::vector<Poly<F>> upd;
            upd.reserve(diff.size());
            for (const auto& d : diff.coeffs()) {
                upd.push_back(M.scaled(d * s));
            }
            H = H + P(std::move(upd));
        }
        M = M * (x_var - Poly<F>(pt));
        ++count;
        if ((diff.is_zero() && count > 1) || count > bound) {
            P G = make_monic(strip(H, content(H)));
            if (try_divide(A, G) && try_divide(B, G)) {
                return make_monic(G.scaled(c));
            }
        }
    }
}

template <Field F>
struct Xgcd {
    Poly<F> g;
    Poly<F> s;
};

/// s a = g mod b with g the monic gcd.
template <Field F>
Xgcd<F> xgcd(const Poly<F>& a, const Poly<F>& b)
{
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0(1L), s1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.is_zero()) {
        return {r0, s0};
    }
    F inv = r0.lc().inv();
    return {r0.scaled(inv), s0.scaled(inv)};
}

/// Solves s a + t b = c with deg s < deg b, assuming gcd(a, b) = 1.
template <Field F>
std::pair<Poly<F>, Poly<F>> solve_bezout(const Poly<F>& a, const Poly<F>& b, const Poly<F>& c)
{
    auto x = xgcd(a, b);
    if (x.g.degree() != 0) {
        throw std::logic_error("solve_bezout: arguments are not coprime");
    }
    Poly<F> s = divmod(x.s * c, b).second;
    Poly<F> t = exact_divide(c - s * a, b);
    return {std::move(s), std::move(t)};
}

/// Inverse of a modulo m; a and m coprime.
template <Field F>
Poly<F> inverse_mod(const Poly<F>& a, const Poly<F>& m)
{
    auto x = xgcd(divmod(a, m).second, m);
    if (x.g.degree() != 0) {
        throw std::logic_error("inverse_mod: not invertible");
    }
    return divmod(x.s, m).second;
}

template <class F>
struct SquarefreeFactor {
    Poly<F> factor;
    int multiplicity;
};

/// Yun's algorithm: p = u * prod factor^multiplicity, factors normalized,
/// squarefree and pairwise coprime. Over a polynomial ring p must be primitive;
/// u is then a scalar.
template <class F>
std::vector<SquarefreeFactor<F>> squarefree_decomposition(const Poly<F>& p)
{
    if (p.is_zero()) {
        throw ZeroPolynomial();
    }
    std::vector<SquarefreeFactor<F>> out;
    if (p.degree() == 0) {
        return out;
    }
    Poly<F> a = make_monic(p);
    Poly<F> b = derivative(a);
    Poly<F> c = gcd(a, b);
    Poly<F> w = exact_divide(a, c);
    Poly<F> y = exact_divide(b, c);
    Poly<F> z = y - derivative(w);
    int i = 1;
    while (w.degree() > 0) {
        Poly<F> g = gcd(w, z);
        w = exact_divide(w, g);
        y = exact_divide(z, g);
        z = y - derivative(w);
        if (g.degree() > 0) {
            out.push_back({std::move(g), i});
        }
        ++i;
    }
    return out;
}

template <class F>
bool is_squarefree(const Poly<F>& p)
{
    return gcd(p, derivative(p)).degree() == 0;
}

}  // namespace biexact

#endif
