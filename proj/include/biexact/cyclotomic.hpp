#ifndef BIEXACT_CYCLOTOMIC_HPP
#define BIEXACT_CYCLOTOMIC_HPP

#include <cstdint>
#include <memory>
#include <vector>
#include <optional>
#include <string>

#include "biexact/poly.hpp"
#include "biexact/rational.hpp"

namespace biexact {

/// Modulus data for Q(zeta_m) = Q[t]/Phi_m(t).
struct CyclotomicContext {
    int order = 1;
    Poly<Rational> modulus;  // Phi_m
    int degree = 1;          // Euler phi(m)
};

/// Phi_m computed by division of t^m - 1 by the lower cyclotomic polynomials.
Poly<Rational> cyclotomic_polynomial(int m);

std::shared_ptr<const CyclotomicContext> make_cyclotomic_context(int m);

/// Element of Q(zeta_m), stored as a residue polynomial of degree < phi(m).
///
/// Rational constants carry no context; the context is picked up from any
/// non-constant operand, so integers embed without knowing m.
class Cyclotomic {
public:
    static constexpr bool is_field = true;

    Cyclotomic() = default;
    Cyclotomic(long c) : rep_(Rational(c)) {}
    explicit Cyclotomic(const Rational& c) : rep_(c) {}
    Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx, const Poly<Rational>& rep);

    /// zeta_m itself.
    static Cyclotomic generator(std::shared_ptr<const CyclotomicContext> ctx);

    const Poly<Rational>& rep() const { return rep_; }
    const std::shared_ptr<const CyclotomicContext>& context() const { return ctx_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    std::optional<long> as_integer() const { return rep_.as_integer(); }

    Cyclotomic inv() const;
    /// Image under the automorphism zeta -> zeta^k, gcd(k, m) = 1.
    Cyclotomic galois(int k) const;

    Cyclotomic operator-() const { return Cyclotomic(ctx_, -rep_, Reduced{}); }
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inv(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.rep_ == b.rep_; }
    friend int compare(const Cyclotomic& a, const Cyclotomic& b) { return compare(a.rep_, b.rep_); }

private:
    struct Reduced {};
    Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx, Poly<Rational> rep, Reduced)
        : ctx_(std::move(ctx)), rep_(std::move(rep))
    {
    }
    void adopt(const Cyclotomic& o)
    {
        if (!ctx_) {
            ctx_ = o.ctx_;
        }
    }

    std::shared_ptr<const CyclotomicContext> ctx_;
    Poly<Rational> rep_;
};

/// Primitive m-th roots of unity modulo a prime p = 1 mod m, as r^k for the
/// k in [1, m] coprime to m.
std::vector<std::uint64_t> primitive_roots(int m, std::uint64_t p);

/// Largest prime p < below with p = 1 mod m.
std::uint64_t prime_one_mod(int m, std::uint64_t below);

/// Monic gcd over Q(zeta_m), by images at every root of Phi_m modulo primes
/// p = 1 mod m.
Poly<Cyclotomic> gcd(const Poly<Cyclotomic>& a, const Poly<Cyclotomic>& b);

}  // namespace biexact

#endif
