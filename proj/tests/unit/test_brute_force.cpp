#include "doctest.h"

#include "biexact/brute_force.hpp"
#include "biexact/printer.hpp"

using namespace biexact;

TEST_CASE("oracle finds constructed certificates")
{
    const Context<Rational> ctx{};
    const RatFunc<Rational> x = rf_x<Rational>(), y = rf_y<Rational>(), one(1L);
    auto f = apply_pair(one / (x + y * y), y, OperatorPair::ShiftX_DerivY, ctx);
    auto c = brute_force_exact(f, OperatorPair::ShiftX_DerivY, ctx);
    REQUIRE(c);
    CHECK(verify_certificate(f, c->first, c->second, OperatorPair::ShiftX_DerivY, ctx));
}

TEST_CASE("oracle refutes 1/(x+y) within bounds")
{
    const Context<Rational> ctx{};
    const RatFunc<Rational> x = rf_x<Rational>(), y = rf_y<Rational>(), one(1L);
    CHECK(!brute_force_exact(one / (x + y), OperatorPair::ShiftX_DerivY, ctx, {4, 4}));
    CHECK(!brute_force_exact(one / (x * y), OperatorPair::ShiftX_DerivY, ctx, {4, 4}));
}

TEST_CASE("oracle finds the q certificate of 1/(xy)")
{
    using F = RatFunc1<Rational>;
    auto ctx = make_context<F>(QMode::transcendental());
    const RatFunc<F> x = rf_x<F>(), y = rf_y<F>(), one(1L);
    auto f = one / (x * y);
    auto c = brute_force_exact(f, OperatorPair::QShiftX_ShiftY, ctx);
    REQUIRE(c);
    CHECK(verify_certificate(f, c->first, c->second, OperatorPair::QShiftX_ShiftY, ctx));
}

TEST_CASE("oracle over a root of unity")
{
    auto ctx = make_context<Cyclotomic>(QMode::root_of_unity(4));
    const RatFunc<Cyclotomic> x = rf_x<Cyclotomic>(), y = rf_y<Cyclotomic>();
    auto c = brute_force_exact(x / y, OperatorPair::RootOfUnity_DerivY, ctx);
    REQUIRE(c);
    CHECK(verify_certificate(x / y, c->first, c->second, OperatorPair::RootOfUnity_DerivY, ctx));
    CHECK(!brute_force_exact(RatFunc<Cyclotomic>(1L) / y, OperatorPair::RootOfUnity_DerivY, ctx, {2, 2}));
}
