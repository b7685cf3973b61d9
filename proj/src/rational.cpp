#include "biexact/rational.hpp"

#include <climits>
#include <stdexcept>

namespace biexact {

Rational Rational::inv() const
{
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::optional<long> Rational::as_integer() const
{
    if (v_.get_den() != 1 || !v_.get_num().fits_slong_p()) {
        return std::nullopt;
    }
    return v_.get_num().get_si();
}

}  // namespace biexact
