#include "doctest.h"

#include "biexact/factor.hpp"
#include "biexact/qmode.hpp"

using namespace biexact;

namespace {

using B = BiPoly<Rational>;
B X() { return bi_x<Rational>(); }
B Y() { return bi_y<Rational>(); }
B C(long c) { return B(c); }
const Context<Rational> Q0{};
const Context<RatFunc1<Rational>> QT = make_context<RatFunc1<Rational>>(QMode::transcendental());

}  // namespace

TEST_CASE("content and primitive part")
{
    auto [c, pp] = content_primitive(Y() * Y() * X() + Y() * Y(), Var::X);
    CHECK(c == Y() * Y());
    CHECK(pp == X() + C(1));
    auto [c2, pp2] = content_primitive(C(3) * Y(), Var::X);
    CHECK(c2 == C(3) * Y());
    CHECK(pp2 == C(1));
}

TEST_CASE("squarefree in y")
{
    auto s = squarefree(Y() * Y() * Y() + Y() * Y(), Var::Y);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.expand() == Y() * Y() * Y() + Y() * Y());
    auto s2 = squarefree((X() + Y()) * (X() + Y()) * (X() - Y()), Var::Y);
    REQUIRE(s2.factors.size() == 2);
    CHECK(s2.expand() == (X() + Y()) * (X() + Y()) * (X() - Y()));
}

TEST_CASE("bivariate factor")
{
    auto f = factor(X() * X() - Y() * Y(), Q0);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.expand() == X() * X() - Y() * Y());
    B p = X() * X() * Y() - X() + X() * Y() - C(1);
    auto g = factor(p, Q0);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.expand() == p);
    // x^2 + y^2 is irreducible over Q
    CHECK(factor(X() * X() + Y() * Y(), Q0).factors.size() == 1);
    B big = (X() * X() * Y() + C(3) * X() - C(7)) * (Y() * Y() - X() * X() * X() + C(2)) * (X() * Y() + C(1)) *
            (X() * Y() + C(1));
    auto h = factor(big, Q0);
    CHECK(h.factors.size() == 3);
    CHECK(h.expand() == big);
}

TEST_CASE("factor over Q(i)")
{
    using BC = BiPoly<Cyclotomic>;
    auto ctx = make_context<Cyclotomic>(QMode::root_of_unity(4));
    BC x = bi_x<Cyclotomic>(), y = bi_y<Cyclotomic>();
    auto f = factor(x * x + y * y, ctx);
    CHECK(f.factors.size() == 2);
    CHECK(f.expand() == x * x + y * y);
}

TEST_CASE("factor over Q(q)")
{
    using F = RatFunc1<Rational>;
    using BQ = BiPoly<F>;
    BQ x = bi_x<F>(), y = bi_y<F>();
    BQ q = bi_constant(F::variable());
    BQ p = (q * x + y) * (x * y - q * q);
    auto f = factor(p, QT);
    CHECK(f.factors.size() == 2);
    CHECK(f.expand() == p);
    BQ r = x * x - q * y * y;  // irreducible over Q(q)
    CHECK(factor(r, QT).factors.size() == 1);
}
