#ifndef BIEXACT_ERRORS_HPP
#define BIEXACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace biexact {

class ZeroDenominator : public std::domain_error {
public:
    ZeroDenominator() : std::domain_error("zero denominator") {}
};

class ZeroPolynomial : public std::domain_error {
public:
    ZeroPolynomial() : std::domain_error("operation undefined on the zero polynomial") {}
};

class QModeMismatch : public std::invalid_argument {
public:
    explicit QModeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when the randomized lifting in bivariate factorization exhausts its
/// retry budget. `polynomial` carries a printable form of the offending input.
class FactorizationIncomplete : public std::runtime_error {
public:
    explicit FactorizationIncomplete(std::string polynomial)
        : std::runtime_error("factorization incomplete for " + polynomial), polynomial_(std::move(polynomial)) {}
    const std::string& polynomial() const { return polynomial_; }

private:
    std::string polynomial_;
};

}  // namespace biexact

#endif
