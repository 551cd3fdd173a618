#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parzero/families.hpp"
#include "parzero/hp/complex.hpp"
#include "parzero/polynomial.hpp"

namespace parzero {

struct RootEntry {
    HPComplex value;
    int multiplicity = 1;
};

// All complex zeros of one polynomial, with provenance metadata.
struct ZeroSet {
    std::optional<FamilyId> family;
    long n = 0;
    std::vector<RootEntry> roots;  // sorted by argument in [0, 2pi), then modulus
    mpfr_prec_t precision_bits = 0;
    double max_residual = 0.0;     // certified backward-error bound, max over roots
    long deflated_origin_multiplicity = 0;

    long total_roots() const
    {
        long t = 0;
        for (const auto& r : roots) t += r.multiplicity;
        return t;
    }
};

class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Starting precision: max(128, bitlength(max |coeff|) + 4 ceil(log2(deg+1)) + 64).
mpfr_prec_t precision_policy(const ExactPolynomial& p);

struct FindRootsOptions {
    mpfr_prec_t precision_override = 0;  // 0: use precision_policy
    long max_sweeps_per_level = 2000;
    int max_precision_factor = 8;        // precision doubles up to this factor
};

// Simultaneous Ehrlich-Aberth iteration at adaptive precision. Zeros at the
// origin are removed by exact deflation first. Each returned root x satisfies
//   |p(x)| / sum_k |a_k| |x|^k  <=  target_residual
// (backward error), certified including evaluation rounding.
ZeroSet find_roots(const ExactPolynomial& p, double target_residual,
                   const FindRootsOptions& opts = {});

// Convenience wrapper that generates the family polynomial and tags metadata.
ZeroSet find_family_roots(FamilyId f, long n, double target_residual,
                          const FindRootsOptions& opts = {});

}  // namespace parzero
