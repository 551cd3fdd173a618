#include "parzero/biseries.hpp"

#include <stdexcept>

namespace parzero {

TruncatedBiseries::TruncatedBiseries(long order) : order_(order)
{
    if (order < 0) throw std::invalid_argument("biseries order must be >= 0");
    qcoeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedBiseries TruncatedBiseries::one(long order)
{
    TruncatedBiseries s(order);
    s.qcoeffs_[0] = LaurentPolynomial::monomial(1, 0);
    return s;
}

TruncatedBiseries TruncatedBiseries::inv_factor(long z_exponent, long q_exponent, long order)
{
    if (q_exponent < 1)
        throw std::domain_error("inv_factor: q exponent must be >= 1 for a convergent q-series");
    TruncatedBiseries s(order);
    for (long j = 0; q_exponent * j <= order; ++j)
        s.qcoeffs_[static_cast<std::size_t>(q_exponent * j)] =
            LaurentPolynomial::monomial(1, z_exponent * j);
    return s;
}

TruncatedBiseries TruncatedBiseries::operator*(const TruncatedBiseries& o) const
{
    if (order_ != o.order_)
        throw std::invalid_argument("biseries multiply: order mismatch");
    TruncatedBiseries out(order_);
    for (long i = 0; i <= order_; ++i) {
        const auto& a = qcoeffs_[static_cast<std::size_t>(i)];
        if (a.is_zero()) continue;
        for (long j = 0; i + j <= order_; ++j) {
            const auto& b = o.qcoeffs_[static_cast<std::size_t>(j)];
            if (b.is_zero()) continue;
            auto& c = out.qcoeffs_[static_cast<std::size_t>(i + j)];
            for (const auto& [ea, ca] : a.terms())
                for (const auto& [eb, cb] : b.terms()) c.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

TruncatedBiseries TruncatedBiseries::operator+(const TruncatedBiseries& o) const
{
    if (order_ != o.order_)
        throw std::invalid_argument("biseries add: order mismatch");
    TruncatedBiseries out(order_);
    for (long i = 0; i <= order_; ++i)
        out.qcoeffs_[static_cast<std::size_t>(i)] =
            qcoeffs_[static_cast<std::size_t>(i)] + o.qcoeffs_[static_cast<std::size_t>(i)];
    return out;
}

void TruncatedBiseries::add_shifted(const TruncatedBiseries& s, long shift)
{
    if (order_ != s.order_)
        throw std::invalid_argument("biseries add_shifted: order mismatch");
    for (long i = 0; i + shift <= order_ && i <= order_; ++i) {
        const auto& a = s.qcoeffs_[static_cast<std::size_t>(i)];
        for (const auto& [e, c] : a.terms())
            qcoeffs_[static_cast<std::size_t>(i + shift)].add_term(e, c);
    }
}

void TruncatedBiseries::mul_binomial_factor(long z_exponent, long q_exponent)
{
    // (1 - z^a q^b): subtract the shifted copy, from the top down
    if (q_exponent < 0) throw std::invalid_argument("mul_binomial_factor: negative q exponent");
    for (long i = order_; i >= q_exponent; --i) {
        const auto& src = qcoeffs_[static_cast<std::size_t>(i - q_exponent)];
        if (src.is_zero()) continue;
        auto& dst = qcoeffs_[static_cast<std::size_t>(i)];
        for (const auto& [e, c] : src.terms()) dst.add_term(e + z_exponent, -c);
    }
}

}  // namespace parzero
