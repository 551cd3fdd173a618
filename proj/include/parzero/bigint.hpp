#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace parzero {

// Arbitrary-size signed integer. GMP keeps the canonical form (no leading
// zero limbs, zero is non-negative), which is exactly the invariant we need.
using BigInt = mpz_class;

inline BigInt bigint_from_string(const std::string& s) { return BigInt(s); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Number of bits in |v|; 0 for v == 0.
inline std::size_t bit_length(const BigInt& v)
{
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline BigInt pow_ui(const BigInt& base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace parzero
