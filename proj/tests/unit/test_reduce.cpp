#include "doctest.h"

#include <random>

#include "biexact/printer.hpp"
#include "biexact/reduce.hpp"
#include "common/properties.hpp"

using namespace biexact;

namespace {

using R = RatFunc<Rational>;
const Context<Rational> Q0{};
R x() { return rf_x<Rational>(); }
R y() { return rf_y<Rational>(); }
R c(long v) { return R(v); }

}  // namespace

TEST_CASE("hermite")
{
    auto r = hermite_reduce_y(c(1) / (y() * y()), Q0);
    CHECK(r.terms.empty());
    CHECK(r.h == c(-1) / y());
    R f = c(1) / (y() * y() * (y() + c(1)));
    auto r2 = hermite_reduce_y(f, Q0);
    CHECK(r2.h == c(-1) / y());
    CHECK(r2.residual(Q0) == c(-1) / y() + c(1) / (y() + c(1)));
    CHECK(r2.recompose(Q0) == f);
    auto r3 = hermite_reduce_y(c(1) / (x() + y()), Q0);
    CHECK(r3.h.is_zero());
    CHECK(r3.residual(Q0) == c(1) / (x() + y()));
}

TEST_CASE("abramov")
{
    auto r = abramov_reduce_y(c(1) / (y() * (y() + c(1))), Q0);
    CHECK(r.terms.empty());
    CHECK(r.h == c(-1) / y());
    R f = c(1) / (y() * (y() + c(2)));
    auto r2 = abramov_reduce_y(f, Q0);
    CHECK(r2.terms.empty());
    CHECK(r2.recompose(Q0) == f);
    CHECK(r2.h == (c(-1) / c(2)) * (c(1) / y() + c(1) / (y() + c(1))));
    auto r3 = abramov_reduce_y(c(1) / y(), Q0);
    CHECK(r3.terms.size() == 1);
    CHECK(r3.h.is_zero());
}

TEST_CASE("univariate summability")
{
    auto s = abramov_summable_x(c(1) / (x() * (x() + c(1))), Q0);
    CHECK(s.summable);
    CHECK(*s.certificate == c(-1) / x());
    auto t = abramov_summable_x(c(1) / x(), Q0);
    CHECK(!t.summable);
    REQUIRE(t.obstruction.size() == 1);
    CHECK(to_string(t.obstruction[0].d) == "x");
    CHECK(from_kpoly(t.obstruction[0].a) == c(1));
    auto u = abramov_summable_x(x(), Q0);
    CHECK(u.summable);
    CHECK(*u.certificate == x() * (x() - c(1)) / c(2));
}

TEST_CASE("q-summability")
{
    using F = RatFunc1<Rational>;
    using RQ = RatFunc<F>;
    auto ctx = make_context<F>(QMode::transcendental());
    RQ X = rf_x<F>();
    RQ one(1L);
    auto s = q_summable_x(one / X, ctx);
    CHECK(s.summable);
    CHECK(to_string(*s.certificate) == "q/((1-q)*x)");
    CHECK(!q_summable_x(one / (X - one), ctx).summable);
    CHECK(!q_summable_x(one, ctx).summable);
}

namespace {

using B = BiPoly<Rational>;
B bx() { return bi_x<Rational>(); }
B by() { return bi_y<Rational>(); }

}  // namespace

TEST_CASE("orbit collapse")
{
    auto a = orbit_collapse(c(1), bx() + by(), 1, 1, 0, Shift::SigmaX, Shift::Identity, Q0);
    CHECK(a.u == c(1) / (x() + y()));
    CHECK(a.v.is_zero());
    CHECK(a.numerator == c(1));
    CHECK(delta(a.u, Shift::SigmaX, Q0) + c(1) / (x() + y()) == c(1) / (x() + y() + c(1)));

    auto b = orbit_collapse(x(), bx() + by(), 2, 0, 0, Shift::SigmaX, Shift::SigmaY, Q0);
    CHECK(b.u.is_zero());
    CHECK(b.v.is_zero());
    CHECK(b.numerator == x());

    auto e = orbit_collapse(c(1), bx() + by(), 1, 0, 2, Shift::Identity, Shift::SigmaY, Q0);
    CHECK(e.u.is_zero());
    CHECK(e.v == c(1) / (x() + y()) + c(1) / (x() + y() + c(1)));
    CHECK(e.numerator == c(1));

    // both directions at once, q = 2
    const auto q2 = make_context<Rational>(QMode::rational(Rational(2)));
    const R a0 = x() + c(3);
    const B d = bx() * by() + B(1L);
    auto w = orbit_collapse(a0, d, 2, 2, 1, Shift::TauX, Shift::SigmaY, q2);
    const B shifted = act(act(d, Shift::SigmaY, 1, q2), Shift::TauX, 2, q2);
    CHECK(a0 / R(pow(shifted, 2U)) == delta(w.u, Shift::TauX, q2) + delta(w.v, Shift::SigmaY, q2) +
                                          w.numerator / R(pow(d, 2U)));
    CHECK_THROWS_AS(orbit_collapse(c(1), d, 1, -1, 0, Shift::TauX, Shift::SigmaY, q2), std::invalid_argument);
}

TEST_CASE("phi-Dy reduced form examples")
{
    const R w = c(1) / (x() + y());
    auto a = phi_dy_reduced_form(delta(w, Shift::SigmaX, Q0), Shift::SigmaX, Q0);
    CHECK(a.terms.empty());
    CHECK(a.recompose(Q0) == delta(w, Shift::SigmaX, Q0));

    auto b = phi_dy_reduced_form(w, Shift::SigmaX, Q0);
    CHECK(b.g.is_zero());
    CHECK(b.h.is_zero());
    REQUIRE(b.terms.size() == 1);
    CHECK(b.terms[0].d == bx() + by());
    CHECK(from_kpoly(b.terms[0].a) == c(1));

    auto e = phi_dy_reduced_form(c(1) / (y() * y()), Shift::SigmaX, Q0);
    CHECK(e.g.is_zero());
    CHECK(e.h == c(-1) / y());
    CHECK(e.terms.empty());

    const auto rou = make_context<Cyclotomic>(QMode::root_of_unity(3));
    CHECK_THROWS_AS(phi_dy_reduced_form(RatFunc<Cyclotomic>(1L), Shift::TauX, rou), QModeMismatch);
}

TEST_CASE("tau-sigma reduced form examples")
{
    using F = RatFunc1<Rational>;
    using RQ = RatFunc<F>;
    const auto ctx = make_context<F>(QMode::transcendental());
    const RQ X = rf_x<F>(), Y = rf_y<F>(), one(1L);

    auto a = tau_sigma_reduced_form(one / (X * Y), ctx);
    CHECK(a.g.is_zero());
    CHECK(a.h.is_zero());
    REQUIRE(a.terms.size() == 1);
    CHECK(a.terms[0].d == bi_y<F>());
    CHECK(from_kpoly(a.terms[0].a) == one / X);

    const RQ w = one / (X + Y);
    const RQ f = delta(w, Shift::TauX, ctx) + delta(w, Shift::SigmaY, ctx);
    auto b = tau_sigma_reduced_form(f, ctx);
    CHECK(b.terms.empty());
    CHECK(b.recompose(ctx) == f);

    auto e = tau_sigma_reduced_form(w, ctx);
    REQUIRE(e.terms.size() == 1);
    CHECK(from_kpoly(e.terms[0].a) == one);

    const auto rou = make_context<Cyclotomic>(QMode::root_of_unity(2));
    CHECK_THROWS_AS(tau_sigma_reduced_form(RatFunc<Cyclotomic>(1L), rou), QModeMismatch);
}

TEST_CASE("trace and the root-of-unity reduction")
{
    using C = Cyclotomic;
    using RC = RatFunc<C>;
    const auto ctx = make_context<C>(QMode::root_of_unity(2));
    const RC X = rf_x<C>(), Y = rf_y<C>(), one(1L);
    CHECK(trace_xm(X / Y, ctx).is_zero());
    CHECK(trace_xm(X * X, ctx) == RC(2L) * X * X);
    CHECK(trace_xm(one / Y, ctx) == RC(2L) / Y);

    auto a = tau_reduced_root_of_unity(X / Y, ctx);
    CHECK(a.c.is_zero());
    CHECK(to_string(a.g) == "-x/(2*y)");
    auto b = tau_reduced_root_of_unity(one / Y, ctx);
    CHECK(b.c == one / Y);
    CHECK(b.g.is_zero());
    auto e = tau_reduced_root_of_unity(X * X + X, ctx);
    CHECK(e.c == X * X);
    CHECK(e.g == -X / RC(2L));

    CHECK_THROWS_AS(trace_xm(R(1L), Q0), QModeMismatch);
    CHECK_THROWS_AS(tau_reduced_root_of_unity(R(1L), Q0), QModeMismatch);
}

TEST_CASE("reductions recompose and are reduced")
{
    using testing::Flavor;
    const auto q2 = make_context<Rational>(QMode::rational(Rational(2)));
    for (auto fl : {Flavor::Hermite, Flavor::Abramov, Flavor::PhiDySigma}) {
        auto r = testing::reduction_suite(fl, Q0, 10, 7);
        CHECK_MESSAGE(r.ok(), (testing::flavor_name(fl) + ": " + r.first_failure));
    }
    for (auto fl : {Flavor::PhiDyTau, Flavor::TauSigma}) {
        auto r = testing::reduction_suite(fl, q2, 10, 8);
        CHECK_MESSAGE(r.ok(), (testing::flavor_name(fl) + ": " + r.first_failure));
    }
    auto rou = testing::reduction_suite(Flavor::TauRootOfUnity, make_context<Cyclotomic>(QMode::root_of_unity(4)), 10, 9);
    CHECK_MESSAGE(rou.ok(), rou.first_failure);
}

TEST_CASE("pure differences leave no residual")
{
    std::mt19937_64 rng(23);
    const auto q2 = make_context<Rational>(QMode::rational(Rational(-2, 3)));
    for (int i = 0; i < 10; ++i) {
        const R g = testing::random_ratfunc<Rational>(rng, 3, 9);
        const R h = testing::random_ratfunc<Rational>(rng, 3, 9);
        const R f1 = delta(g, Shift::SigmaX, Q0) + deriv_y(h);
        CHECK(phi_dy_reduced_form(f1, Shift::SigmaX, Q0).terms.empty());
        const R f2 = delta(g, Shift::TauX, q2) + deriv_y(h);
        CHECK(phi_dy_reduced_form(f2, Shift::TauX, q2).terms.empty());
        const R f3 = delta(g, Shift::TauX, q2) + delta(h, Shift::SigmaY, q2);
        CHECK(tau_sigma_reduced_form(f3, q2).terms.empty());
    }
}

namespace {

R x_only(std::mt19937_64& rng)
{
    const R f = testing::random_ratfunc<Rational>(rng, 3, 9);
    B n(f.num().coeff(0)), d(f.den().coeff(0));
    return d.is_zero() ? R(n) : R(n, d);
}

}  // namespace

TEST_CASE("abramov summability agrees with sigma residues")
{
    std::mt19937_64 rng(29);
    int summable = 0;
    for (int i = 0; i < 50; ++i) {
        // x-only inputs, half of them differences
        const R f = i % 2 == 0 ? delta(x_only(rng), Shift::SigmaX, Q0) : x_only(rng);
        const R fy = transpose(f);
        bool residues_vanish = true;
        for (const auto& t : sigma_decomposition(fy, Q0).terms) {
            residues_vanish = residues_vanish && residue_sigma(fy, t.d, t.j, Q0).is_zero();
        }
        auto s = abramov_summable_x(f, Q0);
        CHECK(s.summable == residues_vanish);
        if (s.summable) {
            ++summable;
            CHECK(delta(*s.certificate, Shift::SigmaX, Q0) == f);
        } else {
            CHECK(!s.obstruction.empty());
        }
    }
    CHECK(summable >= 25);
}

TEST_CASE("trace criterion at roots of unity")
{
    auto r2 = testing::root_of_unity_suite(2, 10, 31);
    CHECK_MESSAGE(r2.ok(), r2.first_failure);
    auto r4 = testing::root_of_unity_suite(4, 5, 37);
    CHECK_MESSAGE(r4.ok(), r4.first_failure);
}
