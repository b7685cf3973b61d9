#ifndef BIEXACT_ZASSENHAUS_HPP
#define BIEXACT_ZASSENHAUS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "biexact/poly.hpp"
#include "biexact/rational.hpp"

namespace biexact {

/// Dense polynomial over Z/p, p < 2^31, coefficients increasing, trimmed.
using ZpPoly = std::vector<std::uint64_t>;

namespace zp {

ZpPoly trim(ZpPoly a);
ZpPoly add(const ZpPoly& a, const ZpPoly& b, std::uint64_t p);
ZpPoly sub(const ZpPoly& a, const ZpPoly& b, std::uint64_t p);
ZpPoly mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p);
std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& a, const ZpPoly& b, std::uint64_t p);
ZpPoly gcd(ZpPoly a, ZpPoly b, std::uint64_t p);
ZpPoly make_monic(const ZpPoly& a, std::uint64_t p);
ZpPoly powmod(ZpPoly base, mpz_class e, const ZpPoly& m, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
/// Monic irreducible factors of a monic squarefree polynomial.
std::vector<ZpPoly> factor_squarefree(const ZpPoly& f, std::uint64_t p, std::uint64_t seed);

}  // namespace zp

/// Irreducible factors over Z of a squarefree primitive integer polynomial of
/// positive degree, each primitive with positive leading coefficient.
std::vector<std::vector<mpz_class>> factor_squarefree_integer(const std::vector<mpz_class>& f);

/// Monic irreducible factors over Q of a squarefree polynomial.
std::vector<Poly<Rational>> factor_squarefree_rational(const Poly<Rational>& f);

}  // namespace biexact

#endif
