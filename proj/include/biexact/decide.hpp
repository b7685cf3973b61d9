#ifndef BIEXACT_DECIDE_HPP
#define BIEXACT_DECIDE_HPP

#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "biexact/reduce.hpp"

namespace biexact {

enum class OperatorPair { ShiftX_DerivY, QShiftX_DerivY, QShiftX_ShiftY, RootOfUnity_DerivY, RootOfUnity_ShiftY };

/// Command-line name: dx-dy, dqx-dy or dqx-sy.
std::string pair_name(OperatorPair p);

/// Pair for a command-line name under a q-mode; roots of unity select the
/// root-of-unity variants.
OperatorPair resolve_pair(const std::string& name, const QMode& mode);

inline Shift x_operator(OperatorPair p)
{
    return p == OperatorPair::ShiftX_DerivY ? Shift::SigmaX : Shift::TauX;
}

inline YOp y_operator(OperatorPair p)
{
    return (p == OperatorPair::QShiftX_ShiftY || p == OperatorPair::RootOfUnity_ShiftY) ? YOp::ShiftY : YOp::DerivY;
}

template <Field F>
struct Witness {
    enum class Kind { MixedDenominator, NonSummableResidue };
    Kind kind;
    BiPoly<F> d;
    int j = 1;
    KPoly<F> residue;
};

template <Field F>
struct Decision {
    bool exact = false;
    std::optional<std::pair<RatFunc<F>, RatFunc<F>>> certificate;
    std::optional<Witness<F>> witness;
};

/// d_x(g) + d_y(h) for the pair.
template <Field F>
RatFunc<F> apply_pair(const RatFunc<F>& g, const RatFunc<F>& h, OperatorPair pair, const Context<F>& ctx)
{
    RatFunc<F> gx = delta(g, x_operator(pair), ctx);
    RatFunc<F> hy = y_operator(pair) == YOp::DerivY ? deriv_y(h) : delta(h, Shift::SigmaY, ctx);
    return gx + hy;
}

template <Field F>
bool verify_certificate(const RatFunc<F>& f, const RatFunc<F>& g, const RatFunc<F>& h, OperatorPair pair,
                        const Context<F>& ctx)
{
    return apply_pair(g, h, pair, ctx) == f;
}

namespace detail {

template <Field F>
void check_pair(OperatorPair pair, const Context<F>& ctx)
{
    const bool rou = pair == OperatorPair::RootOfUnity_DerivY || pair == OperatorPair::RootOfUnity_ShiftY;
    if (pair != OperatorPair::ShiftX_DerivY && !ctx.q) {
        throw QModeMismatch("pair " + pair_name(pair) + " needs a value of q");
    }
    if (rou != (pair != OperatorPair::ShiftX_DerivY && ctx.root_of_unity())) {
        throw QModeMismatch("pair and q-mode disagree about q being a root of unity");
    }
}

/// Lifts the univariate test coefficient-wise in y: b with phi(b) - b = a.
template <Field F>
std::optional<RatFunc<F>> summable_coefficientwise(const KPoly<F>& a, Shift phi, const Context<F>& ctx)
{
    RatFunc<F> b;
    const RatFunc<F> y = rf_y<F>();
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto& c = a.coeffs()[k];
        if (c.is_zero()) {
            continue;
        }
        RatFunc<F> ck = from_k(c);
        SummabilityResult<F> s = phi == Shift::SigmaX ? abramov_summable_x(ck, ctx) : q_summable_x(ck, ctx);
        if (!s.summable) {
            return std::nullopt;
        }
        b = b + *s.certificate * RatFunc<F>(pow(bi_y<F>(), static_cast<unsigned>(k)));
    }
    return b;
}

template <Field F>
Decision<F> decide_reduced(const ReducedForm<F>& rf, OperatorPair pair, const Context<F>& ctx)
{
    Decision<F> out;
    RatFunc<F> g = rf.g;
    for (const auto& t : rf.terms) {
        if (!is_free_of_x(t.d)) {
            out.witness = Witness<F>{Witness<F>::Kind::MixedDenominator, t.d, t.j, t.a};
            return out;
        }
        auto b = summable_coefficientwise(t.a, x_operator(pair), ctx);
        if (!b) {
            out.witness = Witness<F>{Witness<F>::Kind::NonSummableResidue, t.d, t.j, t.a};
            return out;
        }
        g = g + *b / RatFunc<F>(pow(t.d, static_cast<unsigned>(t.j)));
    }
    out.exact = true;
    out.certificate = std::make_pair(std::move(g), rf.h);
    return out;
}

template <Field F>
ReducedForm<F> y_reduce(const RatFunc<F>& c, YOp op, const Context<F>& ctx)
{
    if constexpr (std::is_same_v<F, Cyclotomic>) {
        // a trace of an input over Q stays over Q; reduce there
        bool rational = true;
        auto to_q = [&](const Cyclotomic& a) {
            rational = rational && a.is_rational();
            return a.is_rational() ? a.rep().coeff(0) : Rational();
        };
        RatFunc<Rational> cq(map_scalars<Rational>(c.num(), to_q), map_scalars<Rational>(c.den(), to_q));
        if (rational) {
            const Context<Rational> qctx{};
            ReducedForm<Rational> r = op == YOp::DerivY ? hermite_reduce_y(cq, qctx) : abramov_reduce_y(cq, qctx);
            auto up = [](const Rational& a) { return Cyclotomic(a); };
            auto lift = [&](const RatFunc<Rational>& v) {
                return RatFunc<F>(map_scalars<F>(v.num(), up), map_scalars<F>(v.den(), up));
            };
            ReducedForm<F> out;
            out.g = lift(r.g);
            out.h = lift(r.h);
            out.phi = r.phi;
            out.yop = r.yop;
            for (const auto& t : r.terms) {
                out.terms.push_back(PfdTerm<F>{to_kpoly(lift(from_kpoly(t.a))), map_scalars<F>(t.d, up), t.j, t.l});
            }
            return out;
        }
    }
    return op == YOp::DerivY ? hermite_reduce_y(c, ctx) : abramov_reduce_y(c, ctx);
}

template <Field F>
Decision<F> decide_root_of_unity(const RatFunc<F>& f, OperatorPair pair, const Context<F>& ctx)
{
    const int m = ctx.mode.order();
    auto red = tau_reduced_root_of_unity(f, ctx);
    auto cw = compress_x(red.c, m);
    if (!cw) {
        throw std::logic_error("trace is not a function of x^m");
    }
    ReducedForm<F> yr = y_reduce(*cw, y_operator(pair), ctx);
    Decision<F> out;
    if (!yr.terms.empty()) {
        const auto& t = yr.terms.front();
        BiPoly<F> d = expand_x(t.d, m);
        KPoly<F> a = to_kpoly(expand_x(from_kpoly(t.a), m));
        auto kind = is_free_of_x(d) ? Witness<F>::Kind::NonSummableResidue : Witness<F>::Kind::MixedDenominator;
        out.witness = Witness<F>{kind, d, t.j, a};
        return out;
    }
    out.exact = true;
    out.certificate = std::make_pair(red.g, expand_x(yr.h, m));
    return out;
}

}  // namespace detail

/// Decides whether f = d_x(g) + d_y(h) for the pair, with a certificate when
/// it is and a witness when it is not.
template <Field F>
Decision<F> decide_exact(const RatFunc<F>& f, OperatorPair pair, const Context<F>& ctx)
{
    detail::check_pair(pair, ctx);
    Decision<F> d;
    switch (pair) {
    case OperatorPair::ShiftX_DerivY:
    case OperatorPair::QShiftX_DerivY:
        d = detail::decide_reduced(phi_dy_reduced_form(f, x_operator(pair), ctx), pair, ctx);
        break;
    case OperatorPair::QShiftX_ShiftY:
        d = detail::decide_reduced(tau_sigma_reduced_form(f, ctx), pair, ctx);
        break;
    case OperatorPair::RootOfUnity_DerivY:
    case OperatorPair::RootOfUnity_ShiftY:
        d = detail::decide_root_of_unity(f, pair, ctx);
        break;
    }
    if (d.exact && !verify_certificate(f, d.certificate->first, d.certificate->second, pair, ctx)) {
        throw std::logic_error("decide_exact: certificate does not verify");
    }
    return d;
}

}  // namespace biexact

#endif
