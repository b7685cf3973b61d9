#ifndef BIEXACT_PRINTER_HPP
#define BIEXACT_PRINTER_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "biexact/cyclotomic.hpp"
#include "biexact/ratfunc.hpp"

namespace biexact {

/// Exponents (q, x, y) of a monomial.
using Exponents = std::tuple<int, int, int>;

/// Polynomial in Z[q, x, y] (or Q[q, x, y] before clearing) keyed by exponents.
using SparsePoly = std::map<Exponents, mpq_class>;

/// A scalar as a quotient of polynomials in q.
struct QFraction {
    Poly<Rational> num;
    Poly<Rational> den;
};

inline QFraction q_fraction(const Rational& c) { return {Poly<Rational>(c), Poly<Rational>(1L)}; }
inline QFraction q_fraction(const RatFunc1<Rational>& c) { return {c.num(), c.den()}; }
inline QFraction q_fraction(const Cyclotomic& c) { return {c.rep(), Poly<Rational>(1L)}; }

/// Canonical text of n/d with n, d in Q[q, x, y]; d nonzero. When
/// `factor_q_content` is set, the content of d in Q[q] is printed as a
/// separate factor.
std::string format_fraction(const SparsePoly& n, const SparsePoly& d, bool factor_q_content);

/// Canonical text of a polynomial up to a unit: integer-primitive, leading
/// term positive, and with its Q[q]-content removed when `strip_q_content`.
std::string format_polynomial(const SparsePoly& p, bool strip_q_content);

template <Field F>
constexpr bool has_q_content_factoring()
{
    return std::is_same_v<F, RatFunc1<Rational>>;
}

/// Expands num/den over a common q-denominator into Q[q, x, y].
template <Field F>
std::pair<SparsePoly, SparsePoly> to_sparse(const BiPoly<F>& num, const BiPoly<F>& den)
{
    Poly<Rational> l(1L);
    auto collect = [&](const BiPoly<F>& p) {
        for (const auto& cx : p.coeffs()) {
            for (const auto& c : cx.coeffs()) {
                if (!c.is_zero()) {
                    QFraction f = q_fraction(c);
                    if (f.den.degree() > 0) {
                        l = exact_divide(l * f.den, gcd(l, f.den));
                    }
                }
            }
        }
    };
    collect(num);
    collect(den);
    auto expand = [&](const BiPoly<F>& p) {
        SparsePoly out;
        for (std::size_t j = 0; j < p.size(); ++j) {
            const auto& cx = p.coeffs()[j];
            for (std::size_t i = 0; i < cx.size(); ++i) {
                const F& c = cx.coeffs()[i];
                if (c.is_zero()) {
                    continue;
                }
                QFraction f = q_fraction(c);
                Poly<Rational> s = f.num * exact_divide(l, f.den);
                for (std::size_t k = 0; k < s.size(); ++k) {
                    if (!s.coeffs()[k].is_zero()) {
                        out[{static_cast<int>(k), static_cast<int>(i), static_cast<int>(j)}] = s.coeffs()[k].value();
                    }
                }
            }
        }
        return out;
    };
    return {expand(num), expand(den)};
}

template <Field F>
std::string to_string(const RatFunc<F>& f)
{
    auto [n, d] = to_sparse<F>(f.num(), f.den());
    return format_fraction(n, d, has_q_content_factoring<F>());
}

/// Polynomials are printed up to a unit of k.
template <Field F>
std::string to_string(const BiPoly<F>& p)
{
    auto n = to_sparse<F>(p, BiPoly<F>(1L)).first;
    return format_polynomial(n, has_q_content_factoring<F>());
}

template <Field F>
std::string to_string(const KPoly<F>& a)
{
    return to_string(from_kpoly(a));
}

}  // namespace biexact

#endif
