#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parzero/bigint.hpp"

namespace parzero {

// Dense integer polynomial, coefficients stored by ascending degree.
// The zero polynomial is the empty coefficient vector (degree() == -1).
class ExactPolynomial {
public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
    {
        canonicalize();
    }
    static ExactPolynomial constant(BigInt c);
    static ExactPolynomial monomial(BigInt c, std::size_t degree);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& coeff(std::size_t k) const;  // 0 beyond degree

    ExactPolynomial operator+(const ExactPolynomial& o) const;
    ExactPolynomial operator-(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const ExactPolynomial& o) const;
    bool operator==(const ExactPolynomial& o) const { return coeffs_ == o.coeffs_; }

    ExactPolynomial derivative() const;
    BigInt eval(const BigInt& x) const;

    // Largest |coefficient|.
    BigInt max_abs_coeff() const;
    BigInt sum_abs_coeffs() const;

    // Multiplicity of the root at the origin (index of first nonzero
    // coefficient; 0 for the zero polynomial).
    std::size_t origin_multiplicity() const;
    // Divide out x^origin_multiplicity().
    ExactPolynomial deflate_origin() const;

    std::vector<std::string> coeff_strings() const;
    static ExactPolynomial from_coeff_strings(const std::vector<std::string>& v);

private:
    void canonicalize();
    std::vector<BigInt> coeffs_;
};

}  // namespace parzero
