#pragma once

#include <map>
#include <vector>

#include "parzero/bigint.hpp"
#include "parzero/polynomial.hpp"

namespace parzero {

// Sparse Laurent polynomial in z: exponent (possibly negative) -> coefficient.
// Zero coefficients are never stored.
class LaurentPolynomial {
public:
    using Map = std::map<long, BigInt>;

    LaurentPolynomial() = default;
    static LaurentPolynomial monomial(BigInt c, long exponent);

    bool is_zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }
    BigInt coeff(long e) const;
    long min_exponent() const;  // 0 for the zero polynomial
    long max_exponent() const;

    void add_term(long e, const BigInt& c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }

    // True when coeff(m) == coeff(-m) for all m, i.e. L(z) == L(1/z).
    bool is_symmetric() const;

    // Non-negative-exponent part as an ordinary polynomial.
    ExactPolynomial principal_part() const;

    BigInt sum_coeffs() const;

private:
    Map terms_;
};

}  // namespace parzero
