#include "biexact/printer.hpp"

#include <algorithm>
#include <sstream>

namespace biexact {

namespace {

struct Term {
    Exponents e;
    mpz_class c;
};

using IntPoly = std::vector<Term>;

bool graded_lex_before(const Exponents& a, const Exponents& b)
{
    auto [aq, ax, ay] = a;
    auto [bq, bx, by] = b;
    int da = aq + ax + ay;
    int db = bq + bx + by;
    if (da != db) {
        return da > db;
    }
    if (ax != bx) {
        return ax > bx;
    }
    if (ay != by) {
        return ay > by;
    }
    return aq > bq;
}

void sort_graded(IntPoly& p)
{
    std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return graded_lex_before(a.e, b.e); });
}

std::string monomial(const Exponents& e)
{
    std::string s;
    auto put = [&](const char* v, int k) {
        if (k == 0) {
            return;
        }
        if (!s.empty()) {
            s += '*';
        }
        s += v;
        if (k > 1) {
            s += '^' + std::to_string(k);
        }
    };
    put("q", std::get<0>(e));
    put("x", std::get<1>(e));
    put("y", std::get<2>(e));
    return s;
}

std::string term_text(const Term& t)
{
    std::string m = monomial(t.e);
    if (m.empty()) {
        return t.c.get_str();
    }
    if (t.c == 1) {
        return m;
    }
    if (t.c == -1) {
        return "-" + m;
    }
    return t.c.get_str() + "*" + m;
}

// Terms in the given order, joined with explicit signs.
std::string join_terms(const IntPoly& p)
{
    if (p.empty()) {
        return "0";
    }
    std::string s;
    for (const auto& t : p) {
        std::string x = term_text(t);
        if (!s.empty() && x[0] != '-') {
            s += '+';
        }
        s += x;
    }
    return s;
}

bool is_atom(const IntPoly& p)
{
    if (p.size() != 1) {
        return false;
    }
    const auto& [q, x, y] = p[0].e;
    int vars = (q > 0) + (x > 0) + (y > 0);
    if (vars == 0) {
        return p[0].c > 0;
    }
    return vars == 1 && p[0].c == 1;
}

// Multiplies two sparse polynomials by a common rational so that both become
// integral with coprime overall content.
std::pair<IntPoly, IntPoly> integralize(const SparsePoly& n, const SparsePoly& d)
{
    mpz_class l = 1;
    for (const auto* p : {&n, &d}) {
        for (const auto& [e, c] : *p) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        }
    }
    IntPoly in, id;
    mpz_class g = 0;
    for (const auto& [e, c] : n) {
        mpz_class v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        in.push_back({e, v});
    }
    for (const auto& [e, c] : d) {
        mpz_class v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        id.push_back({e, v});
    }
    if (g != 0 && g != 1) {
        for (auto& t : in) {
            t.c /= g;
        }
        for (auto& t : id) {
            t.c /= g;
        }
    }
    return {in, id};
}

// Content of p in Q[q], as a primitive integer polynomial with positive
// lowest coefficient.
Poly<Rational> q_content(const IntPoly& p)
{
    std::map<std::pair<int, int>, std::vector<Rational>> groups;
    for (const auto& t : p) {
        auto [q, x, y] = t.e;
        auto& v = groups[{x, y}];
        if (v.size() <= static_cast<std::size_t>(q)) {
            v.resize(static_cast<std::size_t>(q) + 1);
        }
        v[static_cast<std::size_t>(q)] = Rational(t.c);
    }
    Poly<Rational> g;
    for (auto& [k, v] : groups) {
        g = gcd(g, Poly<Rational>(std::move(v)));
        if (g.degree() == 0) {
            return Poly<Rational>(1L);
        }
    }
    // integer-primitive, lowest coefficient positive
    mpz_class l = 1;
    for (const auto& c : g.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    Poly<Rational> r = g.scaled(Rational(l));
    mpz_class h = 0;
    for (const auto& c : r.coeffs()) {
        mpz_gcd(h.get_mpz_t(), h.get_mpz_t(), c.num().get_mpz_t());
    }
    Rational s(mpz_class(1), h);
    for (const auto& c : r.coeffs()) {
        if (!c.is_zero()) {
            if (c.sign() < 0) {
                s = -s;
            }
            break;
        }
    }
    return r.scaled(s);
}

IntPoly divide_by_q_poly(const IntPoly& p, const Poly<Rational>& c)
{
    std::map<std::pair<int, int>, std::vector<Rational>> groups;
    for (const auto& t : p) {
        auto [q, x, y] = t.e;
        auto& v = groups[{x, y}];
        if (v.size() <= static_cast<std::size_t>(q)) {
            v.resize(static_cast<std::size_t>(q) + 1);
        }
        v[static_cast<std::size_t>(q)] = Rational(t.c);
    }
    IntPoly out;
    for (auto& [k, v] : groups) {
        Poly<Rational> r = exact_divide(Poly<Rational>(std::move(v)), c);
        for (std::size_t i = 0; i < r.size(); ++i) {
            const Rational& a = r.coeffs()[i];
            if (!a.is_zero()) {
                out.push_back({{static_cast<int>(i), k.first, k.second}, a.num()});
            }
        }
    }
    return out;
}

IntPoly q_poly_terms(const Poly<Rational>& c)
{
    IntPoly out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c.coeffs()[i].is_zero()) {
            out.push_back({{static_cast<int>(i), 0, 0}, c.coeffs()[i].num()});
        }
    }
    return out;
}

void negate(IntPoly& p)
{
    for (auto& t : p) {
        t.c = -t.c;
    }
}

}  // namespace

std::string format_fraction(const SparsePoly& n0, const SparsePoly& d0, bool factor_q_content)
{
    if (n0.empty()) {
        return "0";
    }
    auto [n, d] = integralize(n0, d0);
    sort_graded(n);
    Poly<Rational> c(1L);
    if (factor_q_content) {
        c = q_content(d);
        if (c.degree() > 0) {
            d = divide_by_q_poly(d, c);
        }
    }
    sort_graded(d);
    if (d[0].c < 0) {
        negate(d);
        negate(n);
    }
    std::string num = join_terms(n);
    const bool den_is_one = c.degree() <= 0 && d.size() == 1 && std::get<0>(d[0].e) + std::get<1>(d[0].e) + std::get<2>(d[0].e) == 0 && d[0].c == 1;
    if (den_is_one) {
        return num;
    }
    if (n.size() > 1) {
        num = "(" + num + ")";
    }
    std::vector<std::string> parts;
    bool atom = true;
    if (c.degree() > 0) {
        IntPoly cq = q_poly_terms(c);
        std::string s = join_terms(cq);
        if (cq.size() > 1) {
            s = "(" + s + ")";
        }
        parts.push_back(s);
        atom = is_atom(cq);
    }
    const bool rest_is_one = d.size() == 1 && std::get<0>(d[0].e) + std::get<1>(d[0].e) + std::get<2>(d[0].e) == 0 && d[0].c == 1;
    if (!rest_is_one) {
        std::string s = join_terms(d);
        if (d.size() > 1 && !parts.empty()) {
            s = "(" + s + ")";
        }
        parts.push_back(s);
        atom = atom && is_atom(d);
    }
    std::string den;
    for (const auto& p : parts) {
        if (!den.empty()) {
            den += '*';
        }
        den += p;
    }
    const bool wrapped = parts.size() == 1 && den.front() == '(';
    if (parts.size() > 1 || (!atom && !wrapped)) {
        den = "(" + den + ")";
    }
    return num + "/" + den;
}

std::string format_polynomial(const SparsePoly& p0, bool strip_q_content)
{
    if (p0.empty()) {
        return "0";
    }
    SparsePoly one{{{0, 0, 0}, mpq_class(1)}};
    IntPoly p = integralize(p0, one).first;
    mpz_class g = 0;
    for (const auto& t : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    }
    for (auto& t : p) {
        t.c /= g;
    }
    if (strip_q_content) {
        Poly<Rational> c = q_content(p);
        if (c.degree() > 0) {
            p = divide_by_q_poly(p, c);
        }
    }
    sort_graded(p);
    if (p[0].c < 0) {
        negate(p);
    }
    return join_terms(p);
}

}  // namespace biexact
