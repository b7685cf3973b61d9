#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "biexact/cli.hpp"
#include "common/properties.hpp"

using namespace biexact;
using namespace biexact::testing;

namespace {

using Clock = std::chrono::steady_clock;
using QF = RatFunc1<Rational>;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void require(const Report& r, const std::string& what)
    {
        require(r.ok(), what + ": " + std::to_string(r.failures) + "/" + std::to_string(r.cases) + " failed, first: " +
                            r.first_failure);
    }
};

bool run(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body)
{
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && s >= limit_s && o.ok) {
        o.ok = false;
        o.detail = "over the time limit of " + std::to_string(limit_s) + " s";
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << name << " (" << std::fixed << std::setprecision(2)
              << s << " s)";
    if (!o.detail.empty()) {
        std::cout << ": " << o.detail;
    }
    std::cout << std::endl;
    return o.ok;
}

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome worked_examples()
{
    Outcome o;
    auto timed = [&](const std::string& what, auto&& fn) {
        const auto t0 = Clock::now();
        const bool good = fn();
        o.require(good, what);
        o.require(seconds_since(t0) < 1.0, what + " took over 1 s");
    };
    const Context<Rational> q0{};
    const RatFunc<Rational> x = rf_x<Rational>(), y = rf_y<Rational>(), one(1L);
    timed("1/(x+y) with the shift pair", [&] {
        auto d = decide_exact(one / (x + y), OperatorPair::ShiftX_DerivY, q0);
        return !d.exact && d.witness && d.witness->kind == Witness<Rational>::Kind::MixedDenominator;
    });
    timed("1/(xy) with the shift pair", [&] {
        auto d = decide_exact(one / (x * y), OperatorPair::ShiftX_DerivY, q0);
        return !d.exact && d.witness && d.witness->kind == Witness<Rational>::Kind::NonSummableResidue;
    });
    const auto ctx = make_context<QF>(QMode::transcendental());
    const RatFunc<QF> X = rf_x<QF>(), Y = rf_y<QF>(), ONE(1L);
    const RatFunc<QF> q(bi_constant<QF>(QF::variable()));
    timed("1/(x+y) with the q-shift pair", [&] {
        auto d = decide_exact(ONE / (X + Y), OperatorPair::QShiftX_ShiftY, ctx);
        return !d.exact && d.witness && d.witness->kind == Witness<QF>::Kind::MixedDenominator;
    });
    timed("1/(xy) with the q-shift pair", [&] {
        const auto f = ONE / (X * Y);
        auto d = decide_exact(f, OperatorPair::QShiftX_ShiftY, ctx);
        const auto g = q / ((ONE - q) * X * Y);
        return d.exact && verify_certificate(f, d.certificate->first, d.certificate->second,
                                             OperatorPair::QShiftX_ShiftY, ctx) &&
               verify_certificate(f, g, RatFunc<QF>(), OperatorPair::QShiftX_ShiftY, ctx);
    });
    return o;
}

Outcome univariate_examples()
{
    Outcome o;
    const Context<Rational> q0{};
    const RatFunc<Rational> x = rf_x<Rational>(), one(1L);
    const auto f = one / (x * (x + one));
    const auto s = abramov_summable_x(f, q0);
    o.require(s.summable && s.certificate && delta(*s.certificate, Shift::SigmaX, q0) == f,
              "1/(x(x+1)) is summable with a verifying certificate");
    const auto n = abramov_summable_x(one / x, q0);
    bool nonzero = !n.obstruction.empty();
    for (const auto& t : n.obstruction) {
        nonzero = nonzero && !t.a.is_zero();
    }
    o.require(!n.summable && nonzero, "1/x is not summable and has a nonzero residue");
    return o;
}

Outcome constructed_suite()
{
    Outcome o;
    o.require(constructed_exact(OperatorPair::ShiftX_DerivY, Context<Rational>{}, 200, 101), "dx-dy");
    const std::vector<Rational> qs = {Rational(2), Rational(-3), Rational(mpz_class(1), mpz_class(2)),
                                      Rational(mpz_class(5), mpz_class(3))};
    for (auto pair : {OperatorPair::QShiftX_DerivY, OperatorPair::QShiftX_ShiftY}) {
        const std::string name = pair_name(pair);
        std::uint64_t seed = pair == OperatorPair::QShiftX_DerivY ? 200 : 300;
        for (const auto& qv : qs) {
            o.require(constructed_exact(pair, make_context<Rational>(QMode::rational(qv)), 40, ++seed),
                      name + " at q = " + qv.to_string());
        }
        const auto rou = pair == OperatorPair::QShiftX_DerivY ? OperatorPair::RootOfUnity_DerivY
                                                              : OperatorPair::RootOfUnity_ShiftY;
        o.require(constructed_exact(rou, make_context<Cyclotomic>(QMode::root_of_unity(2)), 40, ++seed),
                  name + " at q = -1");
    }
    return o;
}

Outcome reduction_suites()
{
    Outcome o;
    const Context<Rational> q0{};
    const auto q2 = make_context<Rational>(QMode::rational(Rational(2)));
    for (auto fl : {Flavor::Hermite, Flavor::Abramov, Flavor::PhiDySigma}) {
        o.require(reduction_suite(fl, q0, 100, 401), flavor_name(fl));
    }
    for (auto fl : {Flavor::PhiDyTau, Flavor::TauSigma}) {
        o.require(reduction_suite(fl, q2, 100, 402), flavor_name(fl));
    }
    o.require(reduction_suite(Flavor::TauRootOfUnity, make_context<Cyclotomic>(QMode::root_of_unity(4)), 100, 403),
              flavor_name(Flavor::TauRootOfUnity));
    return o;
}

Outcome commutation_suites()
{
    Outcome o;
    o.require(commutation_suite(1, Context<Rational>{}, 50, 501), "(i)");
    const auto sym = make_context<QF>(QMode::transcendental());
    o.require(commutation_suite(2, sym, 50, 502), "(ii)");
    o.require(commutation_suite(3, sym, 50, 503), "(iii)");
    return o;
}

Outcome root_of_unity_suites()
{
    Outcome o;
    o.require(root_of_unity_suite(2, 50, 601), "m = 2");
    o.require(root_of_unity_suite(4, 50, 602), "m = 4");
    const auto ctx = make_context<Cyclotomic>(QMode::root_of_unity(2));
    const RatFunc<Cyclotomic> x = rf_x<Cyclotomic>(), y = rf_y<Cyclotomic>(), one(1L);
    o.require(decide_exact(x / y, OperatorPair::RootOfUnity_DerivY, ctx).exact, "x/y is exact");
    o.require(!decide_exact(one / y, OperatorPair::RootOfUnity_DerivY, ctx).exact, "1/y is not exact");
    return o;
}

Outcome oracle_suites()
{
    Outcome o;
    o.require(oracle_agreement(OperatorPair::ShiftX_DerivY, Context<Rational>{}, 20, 701), "dx-dy");
    const auto sym = make_context<QF>(QMode::transcendental());
    o.require(oracle_agreement(OperatorPair::QShiftX_DerivY, sym, 20, 702), "dqx-dy");
    o.require(oracle_agreement(OperatorPair::QShiftX_ShiftY, sym, 20, 703), "dqx-sy");
    const auto z2 = make_context<Cyclotomic>(QMode::root_of_unity(2));
    o.require(oracle_agreement(OperatorPair::RootOfUnity_DerivY, z2, 10, 704), "dqx-dy at q = -1");
    return o;
}

Outcome determinism(const std::string& corpus)
{
    Outcome o;
    std::ostringstream a, b, ea, eb;
    const int ra = run_cli({"corpus", corpus, "--json"}, a, ea);
    const int rb = run_cli({"corpus", corpus, "--json"}, b, eb);
    o.require(ra == 0 && rb == 0, "corpus run failed: " + ea.str());
    o.require(!a.str().empty(), "no output");
    o.require(a.str() == b.str(), "outputs differ");
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance"};
    std::string corpus;
    app.add_option("--corpus", corpus, "corpus file")->required();
    CLI11_PARSE(app, argc, argv);

    bool ok = true;
    ok &= run(1, "worked examples", 0, worked_examples);
    ok &= run(2, "univariate summability examples", 0.1, univariate_examples);
    ok &= run(3, "constructed exact inputs", 120, constructed_suite);
    ok &= run(4, "reduction recomposition", 60, reduction_suites);
    ok &= run(5, "residues commute with the x-operators", 0, commutation_suites);
    ok &= run(6, "roots of unity", 0, root_of_unity_suites);
    ok &= run(7, "oracle agreement", 0, oracle_suites);
    ok &= run(8, "determinism", 0, [&] { return determinism(corpus); });
    return ok ? 0 : 1;
}
