#include "parzero/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace parzero {

namespace {
const BigInt kZero = 0;
}

ExactPolynomial ExactPolynomial::constant(BigInt c)
{
    std::vector<BigInt> v;
    if (c != 0) v.push_back(std::move(c));
    return ExactPolynomial(std::move(v));
}

ExactPolynomial ExactPolynomial::monomial(BigInt c, std::size_t degree)
{
    std::vector<BigInt> v;
    if (c != 0) {
        v.assign(degree + 1, BigInt(0));
        v[degree] = std::move(c);
    }
    return ExactPolynomial(std::move(v));
}

void ExactPolynomial::canonicalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& ExactPolynomial::coeff(std::size_t k) const
{
    if (k >= coeffs_.size()) return kZero;
    return coeffs_[k];
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& o) const
{
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& o) const
{
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const
{
    if (is_zero() || o.is_zero()) return ExactPolynomial();
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::derivative() const
{
    if (coeffs_.size() <= 1) return ExactPolynomial();
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = coeffs_[k] * static_cast<long>(k);
    return ExactPolynomial(std::move(out));
}

BigInt ExactPolynomial::eval(const BigInt& x) const
{
    BigInt v = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) v = v * x + coeffs_[k];
    return v;
}

BigInt ExactPolynomial::max_abs_coeff() const
{
    BigInt m = 0;
    for (const auto& c : coeffs_) {
        BigInt a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

BigInt ExactPolynomial::sum_abs_coeffs() const
{
    BigInt s = 0;
    for (const auto& c : coeffs_) s += abs(c);
    return s;
}

std::size_t ExactPolynomial::origin_multiplicity() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return k;
    return 0;
}

ExactPolynomial ExactPolynomial::deflate_origin() const
{
    std::size_t m = origin_multiplicity();
    if (m == 0) return *this;
    std::vector<BigInt> out(coeffs_.begin() + static_cast<long>(m), coeffs_.end());
    return ExactPolynomial(std::move(out));
}

std::vector<std::string> ExactPolynomial::coeff_strings() const
{
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

ExactPolynomial ExactPolynomial::from_coeff_strings(const std::vector<std::string>& v)
{
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (const auto& s : v) out.emplace_back(s);
    return ExactPolynomial(std::move(out));
}

}  // namespace parzero
