#include "doctest.h"

#include <random>
#include <set>

#include "biexact/resdec.hpp"
#include "common/properties.hpp"

using namespace biexact;

namespace {

using R = RatFunc<Rational>;
using B = BiPoly<Rational>;
const Context<Rational> Q0{};
R x() { return rf_x<Rational>(); }
R y() { return rf_y<Rational>(); }
R c(long v) { return R(v); }
B bx() { return bi_x<Rational>(); }
B by() { return bi_y<Rational>(); }
KPoly<Rational> k(long v) { return KPoly<Rational>(KField<Rational>(v)); }

}  // namespace

TEST_CASE("partial fractions")
{
    R f = c(1) / (y() * y() * (y() + c(1)));
    auto d = partial_fractions(f, Q0);
    REQUIRE(d.terms.size() == 3);
    CHECK(d.recompose(Q0) == f);
    CHECK(d.poly_part.is_zero());
    // canonical order: y (j = 1), y (j = 2), y + 1
    CHECK(d.terms[0].d == by());
    CHECK(d.terms[0].j == 1);
    CHECK(d.terms[0].a == k(-1));
    CHECK(d.terms[1].j == 2);
    CHECK(d.terms[1].a == k(1));
    CHECK(d.terms[2].d == by() + B(1L));
    CHECK(d.terms[2].a == k(1));

    auto p = partial_fractions(y() * y(), Q0);
    CHECK(p.terms.empty());
    CHECK(from_kpoly(p.poly_part) == y() * y());

    auto s = partial_fractions(c(1) / (x() + y()), Q0);
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms[0].a == k(1));
}

TEST_CASE("sigma decomposition")
{
    R f = c(1) / y() + c(1) / ((y() + c(1)) * (y() + c(1)));
    auto d = sigma_decomposition(f, Q0);
    REQUIRE(d.terms.size() == 2);
    CHECK(d.recompose(Q0) == f);
    CHECK(d.terms[0].d == by());
    CHECK(d.terms[1].d == by());
    CHECK(d.terms[1].j == 2);
    CHECK(d.terms[1].l == 1);

    auto e = sigma_decomposition(c(1) / (y() * (y() + c(1))), Q0);
    REQUIRE(e.terms.size() == 2);
    CHECK(e.terms[0].l == 0);
    CHECK(e.terms[1].l == 1);
    CHECK(e.terms[1].a == k(-1));

    auto m = sigma_decomposition(c(1) / (x() + y()), Q0);
    REQUIRE(m.terms.size() == 1);
    CHECK(m.terms[0].d == bx() + by());
    CHECK(m.terms[0].l == 0);
}

TEST_CASE("residues")
{
    R f = c(1) / (y() * y() * (y() + c(1)));
    CHECK(residue_dy(f, by(), Q0) == k(-1));
    CHECK(residue_dy(f, by() + B(1L), Q0) == k(1));
    CHECK(residue_dy(y() * y() * y(), by(), Q0).is_zero());
    CHECK(residue_sigma(c(1) / (y() * (y() + c(1))), by(), 1, Q0).is_zero());
    CHECK(residue_sigma(c(1) / y(), by(), 1, Q0) == k(1));
    CHECK(residue_sigma(c(1) / y() + c(1) / (y() + c(1)), by(), 1, Q0) == k(2));
    // queried at another orbit member
    CHECK(residue_sigma(c(1) / y() + c(1) / (y() + c(1)), by() + B(1L), 1, Q0) == k(2));
}

TEST_CASE("residue away from the denominator is zero")
{
    CHECK(residue_dy(c(1) / y(), by() + B(3L), Q0).is_zero());
    CHECK(residue_sigma(c(1) / (x() + y()), by(), 1, Q0).is_zero());
    CHECK(residue_sigma(c(1) / y(), by(), 2, Q0).is_zero());
}

namespace {

// Structural invariants of a decomposition; empty when they hold.
std::string decomposition_error(const Decomposition<Rational>& d, bool sigma)
{
    std::set<std::pair<std::string, int>> seen;
    for (const auto& t : d.terms) {
        if (t.a.degree() >= t.d.degree()) {
            return "numerator degree";
        }
        if (!(canonical_factor(t.d) == t.d)) {
            return "non-canonical denominator";
        }
        if (!sigma && t.l != 0) {
            return "offset in plain mode";
        }
        if (t.l < 0) {
            return "negative offset";
        }
        if (!seen.insert({to_string(t.d) + "@" + std::to_string(t.l), t.j}).second) {
            return "repeated term";
        }
    }
    if (sigma) {
        for (std::size_t i = 0; i < d.terms.size(); ++i) {
            for (std::size_t j = i + 1; j < d.terms.size(); ++j) {
                const auto& a = d.terms[i].d;
                const auto& b = d.terms[j].d;
                if (!(a == b) && sigma_equivalent(a, b, Var::Y)) {
                    return "equivalent representatives";
                }
            }
        }
    }
    return "";
}

}  // namespace

TEST_CASE("both decompositions recompose on 100 random inputs")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        const R f = testing::random_ratfunc<Rational>(rng, 4, 9);
        auto p = partial_fractions(f, Q0);
        auto s = sigma_decomposition(f, Q0);
        CHECK(p.recompose(Q0) == f);
        CHECK(s.recompose(Q0) == f);
        CHECK(decomposition_error(p, false) == "");
        CHECK(decomposition_error(s, true) == "");
    }
}

TEST_CASE("decompositions recompose with poles along sigma_y orbits")
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 30; ++i) {
        const B d = testing::random_y_irreducible<Rational>(rng);
        const R f = testing::commutation_input<Rational>(rng, d, Q0);
        auto s = sigma_decomposition(f, Q0);
        CHECK(s.recompose(Q0) == f);
        CHECK(decomposition_error(s, true) == "");
    }
}

TEST_CASE("sigma_y differences have zero sigma residues")
{
    std::mt19937_64 rng(47);
    for (int i = 0; i < 50; ++i) {
        const R g = testing::random_ratfunc<Rational>(rng, 4, 9);
        const R f = delta(g, Shift::SigmaY, Q0);
        for (const auto& t : sigma_decomposition(f, Q0).terms) {
            CHECK(residue_sigma(f, t.d, t.j, Q0).is_zero());
        }
    }
}

TEST_CASE("residues commute with the x-operators")
{
    auto r1 = testing::commutation_suite(1, Q0, 10, 1);
    CHECK_MESSAGE(r1.ok(), r1.first_failure);
    const auto q3 = make_context<Rational>(QMode::rational(Rational(3)));
    auto r2 = testing::commutation_suite(2, q3, 10, 2);
    CHECK_MESSAGE(r2.ok(), r2.first_failure);
    auto r3 = testing::commutation_suite(3, q3, 10, 3);
    CHECK_MESSAGE(r3.ok(), r3.first_failure);
}

TEST_CASE("residues commute with tau for symbolic q")
{
    using T = RatFunc1<Rational>;
    const auto sym = make_context<T>(QMode::transcendental());
    auto r2 = testing::commutation_suite(2, sym, 4, 5);
    CHECK_MESSAGE(r2.ok(), r2.first_failure);
    auto r3 = testing::commutation_suite(3, sym, 3, 6);
    CHECK_MESSAGE(r3.ok(), r3.first_failure);
}
