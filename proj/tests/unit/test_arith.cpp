#include "doctest.h"

#include <random>

#include "biexact/bipoly.hpp"
#include "biexact/cyclotomic.hpp"
#include "biexact/ratfunc1.hpp"
#include "common/random_inputs.hpp"

using namespace biexact;

TEST_CASE("rational basics")
{
    Rational a(mpz_class(2), mpz_class(4));
    CHECK(a == Rational(mpz_class(1), mpz_class(2)));
    CHECK((a * a.inv()).is_one());
    CHECK_THROWS_AS(Rational(0).inv(), std::domain_error);
}

TEST_CASE("poly gcd and squarefree")
{
    using P = Poly<Rational>;
    P t = P::variable();
    P a = (t - P(1L)) * (t + P(2L));
    P b = (t - P(1L)) * (t + P(3L));
    CHECK(gcd(a, b) == t - P(1L));
    auto sf = squarefree_decomposition(t * t * t + t * t);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].factor == t + P(1L));
    CHECK(sf[1].factor == t);
    CHECK(sf[1].multiplicity == 2);
}

TEST_CASE("ratfunc1 field")
{
    using R = RatFunc1<Rational>;
    R q = R::variable();
    R f = R(1L) / (R(1L) - q);
    CHECK((f * (R(1L) - q)).is_one());
    CHECK(f - f == R());
}

TEST_CASE("cyclotomic")
{
    auto ctx = make_cyclotomic_context(4);
    CHECK(ctx->degree == 2);
    Cyclotomic z = Cyclotomic::generator(ctx);
    CHECK(z * z == Cyclotomic(-1L));
    CHECK((z * z * z * z).is_one());
    CHECK((z * z.inv()).is_one());
    CHECK(z.galois(3) == -z);
    CHECK(cyclotomic_polynomial(6) == Poly<Rational>(std::vector<Rational>{1, -1, 1}));
}

TEST_CASE("pseudo division")
{
    using B = BiPoly<Rational>;
    const B x = bi_x<Rational>(), y = bi_y<Rational>();
    const B a = y * y * y * y + x * y + B(1L);
    const B m = B(9L) * y * y * y + x;
    auto [q, r] = pseudo_divmod(a, m);
    CHECK(r.degree() < m.degree());
    CHECK(a * B(81L) == q * m + r);
    // divisor of higher degree: nothing to do
    auto [q0, r0] = pseudo_divmod(m, a);
    CHECK(q0.is_zero());
    CHECK(r0 == m);
}

TEST_CASE("fraction-free inverse agrees with the inverse over k(x)")
{
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        const auto a = testing::random_bipoly<Rational>(rng, 4, 9);
        const auto m = testing::random_bipoly<Rational>(rng, 3, 9);
        if (m.degree() < 1 || a.is_zero() || gcd(to_kpoly(a), to_kpoly(m)).degree() > 0) {
            continue;
        }
        auto [s, c] = inverse_mod_cleared(a, m);
        const KPoly<Rational> inv = to_kpoly(s).scaled(KField<Rational>(c).inv());
        CHECK(divmod(inv * to_kpoly(a) - KPoly<Rational>(1L), to_kpoly(m)).second.is_zero());
        ++checked;
    }
    CHECK(checked > 20);
    const auto y = bi_y<Rational>();
    CHECK_THROWS_AS(inverse_mod_cleared(y * y, y), std::logic_error);
}
