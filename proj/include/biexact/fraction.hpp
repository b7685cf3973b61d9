#ifndef BIEXACT_FRACTION_HPP
#define BIEXACT_FRACTION_HPP

#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "biexact/poly.hpp"
#include "biexact/rational.hpp"

namespace biexact {

template <class P>
P constant_poly(const scalar_t<P>& c)
{
    if constexpr (std::is_same_v<P, scalar_t<P>>) {
        return c;
    } else {
        return P(constant_poly<typename P::coeff_type>(c));
    }
}

/// Fraction field of a (possibly nested) polynomial ring P over a field.
///
/// Canonical form: numerator and denominator coprime, denominator normalized
/// so that its leading scalar (outer variable first) is 1.
template <class P>
class Fraction {
public:
    using ring_type = P;
    using base_field = scalar_t<P>;
    static constexpr bool is_field = true;

    Fraction() : den_(1L) {}
    Fraction(long c) : num_(c), den_(1L) {}
    explicit Fraction(const base_field& c) : num_(constant_poly<P>(c)), den_(1L) {}
    template <class Q>
        requires(std::is_same_v<Q, Rational> && !std::is_same_v<base_field, Rational>)
    explicit Fraction(const Q& c) : Fraction(base_field(c))
    {
    }
    explicit Fraction(P p) : num_(std::move(p)), den_(1L) {}
    Fraction(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    /// num/den already coprime; only the denominator scale is fixed.
    static Fraction coprime(P num, P den) { return Fraction(std::move(num), std::move(den), Normalized{}); }

    static Fraction variable() { return Fraction(P::variable()); }

    const P& num() const { return num_; }
    const P& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return is_scalar(den_); }
    bool is_constant() const { return is_scalar(den_) && is_scalar(num_); }

    std::optional<long> as_integer() const
    {
        if (!is_constant()) {
            return std::nullopt;
        }
        return num_.as_integer();
    }

    Fraction inv() const
    {
        if (is_zero()) {
            throw std::domain_error("division by zero");
        }
        return Fraction(den_, num_, Normalized{});
    }

    Fraction operator-() const
    {
        Fraction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) { return add(a, b, false); }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return add(a, b, true); }
    friend Fraction operator*(const Fraction& a, const Fraction& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Fraction();
        }
        if (is_scalar(a.den_) && is_scalar(b.den_)) {
            return Fraction(a.num_ * b.num_, P(1L), Normalized{});
        }
        P g1 = gcd(a.num_, b.den_);
        P g2 = gcd(b.num_, a.den_);
        P n = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
        P d = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
        return Fraction(std::move(n), std::move(d), Normalized{});
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inv(); }

    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

    friend bool operator==(const Fraction& a, const Fraction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend int compare(const Fraction& a, const Fraction& b)
    {
        int c = compare(a.den_, b.den_);
        return c != 0 ? c : compare(a.num_, b.num_);
    }

private:
    struct Normalized {};
    Fraction(P num, P den, Normalized) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) {
            throw ZeroDenominator();
        }
        if (num_.is_zero()) {
            den_ = P(1L);
            return;
        }
        const auto& s = leading_scalar(den_);
        if (!s.is_one()) {
            auto inv = s.inv();
            num_ = scale_scalar(num_, inv);
            den_ = scale_scalar(den_, inv);
        }
    }

    static Fraction add(const Fraction& a, const Fraction& b, bool subtract)
    {
        if (b.is_zero()) {
            return a;
        }
        if (a.is_zero()) {
            return subtract ? -b : b;
        }
        const P& bn = b.num_;
        if (a.den_ == b.den_) {
            P n = subtract ? a.num_ - bn : a.num_ + bn;
            if (is_scalar(a.den_)) {
                return Fraction(std::move(n), a.den_, Normalized{});
            }
            return Fraction(std::move(n), a.den_);
        }
        // Henrici: only the gcd of the denominators can reappear.
        P g = gcd(a.den_, b.den_);
        if (g.degree() == 0 && g.is_one()) {
            P n = subtract ? a.num_ * b.den_ - bn * a.den_ : a.num_ * b.den_ + bn * a.den_;
            return Fraction(std::move(n), a.den_ * b.den_, Normalized{});
        }
        P ad = exact_divide(a.den_, g);
        P bd = exact_divide(b.den_, g);
        P n = subtract ? a.num_ * bd - bn * ad : a.num_ * bd + bn * ad;
        if (n.is_zero()) {
            return Fraction();
        }
        P g2 = gcd(n, g);
        return Fraction(exact_divide(n, g2), ad * exact_divide(b.den_, g2), Normalized{});
    }

    void normalize()
    {
        if (den_.is_zero()) {
            throw ZeroDenominator();
        }
        if (num_.is_zero()) {
            den_ = P(1L);
            return;
        }
        P g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        const auto s = leading_scalar(den_).inv();
        if (!s.is_one()) {
            num_ = scale_scalar(num_, s);
            den_ = scale_scalar(den_, s);
        }
    }

    P num_;
    P den_;
};

}  // namespace biexact

#endif
