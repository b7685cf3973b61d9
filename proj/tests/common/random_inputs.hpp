#ifndef BIEXACT_TESTS_RANDOM_INPUTS_HPP
#define BIEXACT_TESTS_RANDOM_INPUTS_HPP

#include <random>

#include "biexact/ratfunc.hpp"

namespace biexact::testing {

/// Dense random polynomial of total degree <= deg with integer coefficients
/// in [-c, c].
template <Field F>
BiPoly<F> random_bipoly(std::mt19937_64& rng, int deg, long c)
{
    std::uniform_int_distribution<long> coef(-c, c);
    BiPoly<F> p;
    for (int i = 0; i <= deg; ++i) {
        for (int j = 0; i + j <= deg; ++j) {
            long v = coef(rng);
            if (v != 0) {
                p = p + bi_constant<F>(F(v)) * pow(bi_x<F>(), i) * pow(bi_y<F>(), j);
            }
        }
    }
    return p;
}

/// Random quotient with numerator and denominator total degrees drawn
/// uniformly from [0, max_deg]; the denominator is never zero.
template <Field F>
RatFunc<F> random_ratfunc(std::mt19937_64& rng, int max_deg, long c)
{
    std::uniform_int_distribution<int> d(0, max_deg);
    BiPoly<F> num = random_bipoly<F>(rng, d(rng), c);
    BiPoly<F> den;
    while (den.is_zero()) {
        den = random_bipoly<F>(rng, d(rng), c);
    }
    return RatFunc<F>(num, den);
}

}  // namespace biexact::testing

#endif
