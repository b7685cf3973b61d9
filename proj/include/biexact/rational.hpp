#ifndef BIEXACT_RATIONAL_HPP
#define BIEXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>

namespace biexact {

/// Arbitrary-precision rational number; the base field Q of every tower.
class Rational {
public:
    static constexpr bool is_field = true;

    Rational() = default;
    Rational(long v) : v_(v) {}
    explicit Rational(const mpz_class& v) : v_(v) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { v_.canonicalize(); }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational inv() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

    /// Total order used for canonical sorting.
    friend int compare(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_); }

    std::optional<long> as_integer() const;
    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace biexact

#endif
