#include "biexact/qmode.hpp"

#include <stdexcept>

namespace biexact {

QMode QMode::transcendental()
{
    QMode m;
    m.kind_ = Kind::Transcendental;
    return m;
}

QMode QMode::rational(const biexact::Rational& v)
{
    if (v.is_zero()) {
        throw std::invalid_argument("q must be nonzero");
    }
    if (v.is_one()) {
        return root_of_unity(1);
    }
    if (v == biexact::Rational(-1)) {
        return root_of_unity(2);
    }
    QMode m;
    m.kind_ = Kind::Rational;
    m.value_ = v;
    return m;
}

QMode QMode::root_of_unity(int order)
{
    if (order < 1) {
        throw std::invalid_argument("root of unity order must be positive");
    }
    QMode m;
    m.kind_ = Kind::RootOfUnity;
    m.order_ = order;
    return m;
}

QMode QMode::parse(const std::string& s)
{
    if (s == "none") {
        return none();
    }
    if (s == "symbolic") {
        return transcendental();
    }
    if (s.rfind("rational:", 0) == 0) {
        mpq_class v;
        if (v.set_str(s.substr(9), 10) != 0) {
            throw std::invalid_argument("bad rational q: " + s);
        }
        return rational(biexact::Rational(v));
    }
    if (s.rfind("root:", 0) == 0) {
        std::size_t pos = 0;
        int m = std::stoi(s.substr(5), &pos);
        if (pos != s.size() - 5) {
            throw std::invalid_argument("bad root of unity order: " + s);
        }
        return root_of_unity(m);
    }
    throw std::invalid_argument("unknown q mode: " + s);
}

std::string QMode::describe() const
{
    switch (kind_) {
    case Kind::None:
        return "none";
    case Kind::Transcendental:
        return "symbolic";
    case Kind::Rational:
        return "rational:" + value_.to_string();
    case Kind::RootOfUnity:
        return "root:" + std::to_string(order_);
    }
    return "none";
}

template <>
Context<Rational> make_context<Rational>(const QMode& mode)
{
    Context<Rational> c{mode, std::nullopt};
    switch (mode.kind()) {
    case QMode::Kind::None:
        break;
    case QMode::Kind::Rational:
        c.q = mode.value();
        break;
    case QMode::Kind::RootOfUnity:
        if (mode.order() > 2) {
            throw QModeMismatch("root of unity of order > 2 needs the cyclotomic field");
        }
        c.q = Rational(mode.order() == 1 ? 1 : -1);
        break;
    case QMode::Kind::Transcendental:
        throw QModeMismatch("symbolic q needs the field Q(q)");
    }
    return c;
}

template <>
Context<RatFunc1<Rational>> make_context<RatFunc1<Rational>>(const QMode& mode)
{
    Context<RatFunc1<Rational>> c{mode, std::nullopt};
    switch (mode.kind()) {
    case QMode::Kind::None:
        break;
    case QMode::Kind::Transcendental:
        c.q = RatFunc1<Rational>::variable();
        break;
    case QMode::Kind::Rational:
        c.q = RatFunc1<Rational>(mode.value());
        break;
    case QMode::Kind::RootOfUnity:
        throw QModeMismatch("roots of unity need the cyclotomic field");
    }
    return c;
}

template <>
Context<Cyclotomic> make_context<Cyclotomic>(const QMode& mode)
{
    if (mode.kind() != QMode::Kind::RootOfUnity) {
        throw QModeMismatch("cyclotomic field requires a root of unity");
    }
    return Context<Cyclotomic>{mode, Cyclotomic::generator(make_cyclotomic_context(mode.order()))};
}

namespace {

mpz_class height(const Rational& r)
{
    mpz_class n = abs(r.num());
    mpz_class d = r.den();
    return n > d ? n : d;
}

// k >= 0 with base^k = r; the height of base^k grows strictly since |base| != 1.
std::optional<long> nonnegative_log(const Rational& base, const Rational& r)
{
    const mpz_class h = height(r);
    Rational acc(1);
    for (long k = 0; height(acc) <= h; ++k) {
        if (acc == r) {
            return k;
        }
        acc *= base;
    }
    return std::nullopt;
}

}  // namespace

std::optional<long> q_log(const Context<Rational>& ctx, const Rational& r)
{
    if (r.is_zero()) {
        return std::nullopt;
    }
    const Rational& q = ctx.qv();
    if (ctx.root_of_unity()) {
        if (r.is_one()) {
            return 0L;
        }
        if (q == Rational(-1) && r == Rational(-1)) {
            return 1L;
        }
        return std::nullopt;
    }
    if (auto k = nonnegative_log(q, r)) {
        return k;
    }
    if (auto k = nonnegative_log(q.inv(), r)) {
        return -*k;
    }
    return std::nullopt;
}

std::optional<long> q_log(const Context<RatFunc1<Rational>>& ctx, const RatFunc1<Rational>& r)
{
    if (ctx.mode.kind() == QMode::Kind::Rational) {
        if (!r.is_constant()) {
            return std::nullopt;
        }
        return q_log(Context<Rational>{ctx.mode, ctx.mode.value()}, r.num().lc());
    }
    // q transcendental: r must be t^k exactly
    const auto& n = r.num();
    const auto& d = r.den();
    auto is_monomial = [](const Poly<Rational>& p) {
        for (int i = 0; i < p.degree(); ++i) {
            if (!p.coeffs()[static_cast<std::size_t>(i)].is_zero()) {
                return false;
            }
        }
        return !p.is_zero() && p.lc().is_one();
    };
    if (!is_monomial(n) || !is_monomial(d)) {
        return std::nullopt;
    }
    return static_cast<long>(n.degree()) - static_cast<long>(d.degree());
}

std::optional<long> q_log(const Context<Cyclotomic>& ctx, const Cyclotomic& r)
{
    const Cyclotomic& q = ctx.qv();
    Cyclotomic acc(1L);
    for (long k = 0; k < ctx.mode.order(); ++k) {
        if (acc == r) {
            return k;
        }
        acc = acc * q;
    }
    return std::nullopt;
}

}  // namespace biexact
