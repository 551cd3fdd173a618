#pragma once

#include <string>

#include "parzero/biseries.hpp"
#include "parzero/laurent.hpp"
#include "parzero/partitions.hpp"
#include "parzero/polynomial.hpp"

namespace parzero {

enum class FamilyId { Taylor, Parts, Rank, Crank, Durfee };

std::string family_name(FamilyId f);
FamilyId family_from_name(const std::string& s);

// s_n(x) = sum_{k<=n} p_k x^k.
ExactPolynomial taylor_poly(long n);

// F_n(x) = sum_k p_k(n) x^k; zero constant term.
ExactPolynomial parts_poly(long n);
ExactPolynomial parts_poly(long n, const PartsTriangle& tri);

// Coefficient of q^n in prod_{k>=1} 1/(1 - z q^k); equals parts_poly(n).
ExactPolynomial parts_poly_via_series(long n);

struct RankPolyResult {
    LaurentPolynomial full;       // N_n(z), symmetric
    ExactPolynomial principal;    // r_n(z) = sum_{m>=0} N(m,n) z^m
};

struct CrankPolyResult {
    LaurentPolynomial full;       // M_n(z)
    ExactPolynomial principal;    // c_n(z)
};

// Generating-function route: q^{m^2} / ((zq;q)_m (z^{-1}q;q)_m) summed over m,
// truncated at q-order n.
RankPolyResult rank_poly(long n);

// Generating-function route: prod_{j>=1} (1-q^j)/((1-z q^j)(1-z^{-1} q^j)),
// valid for n >= 2; n == 1 is rejected (the known pathological coefficient).
CrankPolyResult crank_poly(long n);

// Combinatorial (enumeration) routes, n <= 60.
LaurentPolynomial rank_counts_oracle(long n);
LaurentPolynomial crank_counts_oracle(long n);
ExactPolynomial durfee_counts_oracle(long n);
ExactPolynomial parts_counts_oracle(long n);

// d_n(z) = sum_k d(n,k) z^k from sum_k q^{k^2} z^k / (q;q)_k^2; degree floor(sqrt(n)).
ExactPolynomial durfee_poly(long n);

// Batch generation (shares the series accumulation across all n <= n_max).
std::vector<LaurentPolynomial> rank_polys_upto(long n_max);
std::vector<LaurentPolynomial> crank_polys_upto(long n_max);
std::vector<ExactPolynomial> durfee_polys_upto(long n_max);

// Dispatch by family.
ExactPolynomial family_poly(FamilyId f, long n);

}  // namespace parzero
