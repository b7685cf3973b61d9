#ifndef BIEXACT_QMODE_HPP
#define BIEXACT_QMODE_HPP

#include <memory>
#include <optional>
#include <string>

#include "biexact/cyclotomic.hpp"
#include "biexact/errors.hpp"
#include "biexact/ratfunc1.hpp"
#include "biexact/rational.hpp"

namespace biexact {

/// How the parameter q is interpreted.
class QMode {
public:
    enum class Kind { None, Transcendental, Rational, RootOfUnity };

    QMode() = default;
    static QMode none() { return QMode(); }
    static QMode transcendental();
    /// Rejects 0; 1 and -1 become roots of unity of order 1 and 2.
    static QMode rational(const biexact::Rational& v);
    static QMode root_of_unity(int m);
    /// Inverse of describe(): none, symbolic, rational:a/b, root:m.
    static QMode parse(const std::string& s);

    Kind kind() const { return kind_; }
    const biexact::Rational& value() const { return value_; }
    int order() const { return order_; }
    bool has_q() const { return kind_ != Kind::None; }
    std::string describe() const;

    friend bool operator==(const QMode& a, const QMode& b)
    {
        return a.kind_ == b.kind_ && a.value_ == b.value_ && a.order_ == b.order_;
    }

private:
    Kind kind_ = Kind::None;
    biexact::Rational value_;
    int order_ = 0;
};

/// The constant field k together with the value of q in it.
template <Field F>
struct Context {
    QMode mode;
    std::optional<F> q;

    const F& qv() const
    {
        if (!q) {
            throw QModeMismatch("operator requires a value of q");
        }
        return *q;
    }
    bool root_of_unity() const { return mode.kind() == QMode::Kind::RootOfUnity; }
};

template <Field F>
Context<F> make_context(const QMode& mode);

template <>
Context<Rational> make_context<Rational>(const QMode& mode);
template <>
Context<RatFunc1<Rational>> make_context<RatFunc1<Rational>>(const QMode& mode);
template <>
Context<Cyclotomic> make_context<Cyclotomic>(const QMode& mode);

/// q^k for any integer k.
template <Field F>
F qpow(const Context<F>& ctx, long k)
{
    const F& q = ctx.qv();
    F base = k < 0 ? q.inv() : q;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    F r(1L);
    while (e > 0) {
        if (e & 1UL) {
            r = r * base;
        }
        e >>= 1UL;
        if (e > 0) {
            base = base * base;
        }
    }
    return r;
}

/// Integer k with q^k = r, if any. Exponents are unique except for roots of
/// unity, where the least nonnegative one is returned.
std::optional<long> q_log(const Context<Rational>& ctx, const Rational& r);
std::optional<long> q_log(const Context<RatFunc1<Rational>>& ctx, const RatFunc1<Rational>& r);
std::optional<long> q_log(const Context<Cyclotomic>& ctx, const Cyclotomic& r);

}  // namespace biexact

#endif
