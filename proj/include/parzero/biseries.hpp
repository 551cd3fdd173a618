#pragma once

#include <vector>

#include "parzero/laurent.hpp"

namespace parzero {

// Power series in q truncated at order N, with Laurent-polynomial (in z)
// coefficients. Arithmetic silently drops terms of q-order > N, matching
// generating-function usage where only coefficients up to q^N are wanted.
class TruncatedBiseries {
public:
    explicit TruncatedBiseries(long order);

    long order() const { return order_; }
    const LaurentPolynomial& qcoeff(long k) const { return qcoeffs_[static_cast<std::size_t>(k)]; }
    LaurentPolynomial& qcoeff(long k) { return qcoeffs_[static_cast<std::size_t>(k)]; }

    static TruncatedBiseries one(long order);

    // Geometric expansion of 1/(1 - z^a q^b), b >= 1:
    //   sum_{j>=0} z^{aj} q^{bj}  truncated at q-order N.
    // b == 0 is rejected (not convergent as a q-series).
    static TruncatedBiseries inv_factor(long z_exponent, long q_exponent, long order);

    TruncatedBiseries operator*(const TruncatedBiseries& o) const;
    TruncatedBiseries operator+(const TruncatedBiseries& o) const;

    // *this += q^shift * s  (terms beyond the order are dropped)
    void add_shifted(const TruncatedBiseries& s, long shift);

    // Multiply in place by the two-term factor (1 - z^a q^b).
    void mul_binomial_factor(long z_exponent, long q_exponent);

    bool operator==(const TruncatedBiseries& o) const
    {
        return order_ == o.order_ && qcoeffs_ == o.qcoeffs_;
    }

private:
    long order_;
    std::vector<LaurentPolynomial> qcoeffs_;
};

}  // namespace parzero
