#include "parzero/laurent.hpp"

namespace parzero {

LaurentPolynomial LaurentPolynomial::monomial(BigInt c, long exponent)
{
    LaurentPolynomial out;
    if (c != 0) out.terms_[exponent] = std::move(c);
    return out;
}

BigInt LaurentPolynomial::coeff(long e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

long LaurentPolynomial::min_exponent() const
{
    return terms_.empty() ? 0 : terms_.begin()->first;
}

long LaurentPolynomial::max_exponent() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(long e, const BigInt& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const
{
    LaurentPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const
{
    LaurentPolynomial out;
    if (terms_.empty() || o.terms_.empty()) return out;
    // accumulate into a dense window, then compress
    long lo = min_exponent() + o.min_exponent();
    long hi = max_exponent() + o.max_exponent();
    std::vector<BigInt> buf(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            buf[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    for (long e = lo; e <= hi; ++e) {
        auto& v = buf[static_cast<std::size_t>(e - lo)];
        if (v != 0) out.terms_.emplace(e, std::move(v));
    }
    return out;
}

bool LaurentPolynomial::is_symmetric() const
{
    for (const auto& [e, c] : terms_)
        if (coeff(-e) != c) return false;
    return true;
}

ExactPolynomial LaurentPolynomial::principal_part() const
{
    if (terms_.empty()) return ExactPolynomial();
    long hi = max_exponent();
    if (hi < 0) return ExactPolynomial();
    std::vector<BigInt> coeffs(static_cast<std::size_t>(hi + 1), BigInt(0));
    for (const auto& [e, c] : terms_)
        if (e >= 0) coeffs[static_cast<std::size_t>(e)] = c;
    return ExactPolynomial(std::move(coeffs));
}

BigInt LaurentPolynomial::sum_coeffs() const
{
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

}  // namespace parzero
