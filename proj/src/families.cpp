#include "parzero/families.hpp"

#include <cmath>
#include <stdexcept>

namespace parzero {

std::string family_name(FamilyId f)
{
    switch (f) {
        case FamilyId::Taylor: return "taylor";
        case FamilyId::Parts: return "parts";
        case FamilyId::Rank: return "rank";
        case FamilyId::Crank: return "crank";
        case FamilyId::Durfee: return "durfee";
    }
    throw std::logic_error("unreachable");
}

FamilyId family_from_name(const std::string& s)
{
    if (s == "taylor") return FamilyId::Taylor;
    if (s == "parts") return FamilyId::Parts;
    if (s == "rank") return FamilyId::Rank;
    if (s == "crank") return FamilyId::Crank;
    if (s == "durfee") return FamilyId::Durfee;
    throw std::invalid_argument("unknown family: " + s);
}

ExactPolynomial taylor_poly(long n)
{
    if (n < 0) throw std::invalid_argument("taylor_poly: n must be >= 0");
    auto t = partition_counts(n);
    return ExactPolynomial(std::move(t.p));
}

ExactPolynomial parts_poly(long n, const PartsTriangle& tri)
{
    if (n < 1) throw std::invalid_argument("parts_poly: n must be >= 1");
    if (n > tri.n_max()) throw std::invalid_argument("parts_poly: n beyond triangle");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (long k = 1; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = tri.at(n, k);
    return ExactPolynomial(std::move(coeffs));
}

ExactPolynomial parts_poly(long n)
{
    PartsTriangle tri(n);
    return parts_poly(n, tri);
}

ExactPolynomial parts_poly_via_series(long n)
{
    if (n < 1) throw std::invalid_argument("parts_poly_via_series: n must be >= 1");
    auto s = TruncatedBiseries::one(n);
    for (long k = 1; k <= n; ++k) s = s * TruncatedBiseries::inv_factor(1, k, n);
    return s.qcoeff(n).principal_part();
}

namespace {

// sum over m of q^{m^2} prod_{j=1..m} 1/((1 - z q^j)(1 - z^{-1} q^j)), order N
TruncatedBiseries rank_series(long N)
{
    auto R = TruncatedBiseries::one(N);
    auto S = TruncatedBiseries::one(N);
    for (long m = 1; m * m <= N; ++m) {
        S = S * TruncatedBiseries::inv_factor(1, m, N);
        S = S * TruncatedBiseries::inv_factor(-1, m, N);
        R.add_shifted(S, m * m);
    }
    return R;
}

// prod_{j=1..N} (1 - q^j) / ((1 - z q^j)(1 - z^{-1} q^j)), order N
TruncatedBiseries crank_series(long N)
{
    auto C = TruncatedBiseries::one(N);
    for (long j = 1; j <= N; ++j) {
        C.mul_binomial_factor(0, j);
        C = C * TruncatedBiseries::inv_factor(1, j, N);
        C = C * TruncatedBiseries::inv_factor(-1, j, N);
    }
    return C;
}

// sum over k of q^{k^2} z^k / (q;q)_k^2, order N
std::vector<ExactPolynomial> durfee_from_series(long N)
{
    TruncatedBiseries D(N);
    auto U = TruncatedBiseries::one(N);  // 1/(q;q)_k, univariate in q
    for (long k = 1; k * k <= N; ++k) {
        U = U * TruncatedBiseries::inv_factor(0, k, N);
        auto V = U * U;
        TruncatedBiseries term(N);
        for (long i = 0; i + k * k <= N; ++i)
            for (const auto& [e, c] : V.qcoeff(i).terms())
                term.qcoeff(i + k * k).add_term(e + k, c);
        D = D + term;
    }
    std::vector<ExactPolynomial> out(static_cast<std::size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) out[static_cast<std::size_t>(n)] = D.qcoeff(n).principal_part();
    return out;
}

}  // namespace

RankPolyResult rank_poly(long n)
{
    if (n < 1) throw std::invalid_argument("rank_poly: n must be >= 1");
    auto R = rank_series(n);
    RankPolyResult out;
    out.full = R.qcoeff(n);
    out.principal = out.full.principal_part();
    return out;
}

CrankPolyResult crank_poly(long n)
{
    if (n == 1)
        throw std::domain_error(
            "crank_poly: the generating function is valid only for n >= 2; "
            "use the combinatorial route (crank_counts_oracle) for n = 1");
    if (n < 1) throw std::invalid_argument("crank_poly: n must be >= 1");
    auto C = crank_series(n);
    CrankPolyResult out;
    out.full = C.qcoeff(n);
    out.principal = out.full.principal_part();
    return out;
}

ExactPolynomial durfee_poly(long n)
{
    if (n < 1) throw std::invalid_argument("durfee_poly: n must be >= 1");
    auto all = durfee_from_series(n);
    return all[static_cast<std::size_t>(n)];
}

std::vector<LaurentPolynomial> rank_polys_upto(long n_max)
{
    auto R = rank_series(n_max);
    std::vector<LaurentPolynomial> out(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = R.qcoeff(n);
    return out;
}

std::vector<LaurentPolynomial> crank_polys_upto(long n_max)
{
    auto C = crank_series(n_max);
    std::vector<LaurentPolynomial> out(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = C.qcoeff(n);
    return out;
}

std::vector<ExactPolynomial> durfee_polys_upto(long n_max) { return durfee_from_series(n_max); }

LaurentPolynomial rank_counts_oracle(long n)
{
    LaurentPolynomial out;
    for_each_partition(n, [&](const Partition& lam) { out.add_term(partition_rank(lam), 1); });
    return out;
}

LaurentPolynomial crank_counts_oracle(long n)
{
    LaurentPolynomial out;
    for_each_partition(n, [&](const Partition& lam) { out.add_term(partition_crank(lam), 1); });
    return out;
}

ExactPolynomial durfee_counts_oracle(long n)
{
    LaurentPolynomial acc;
    for_each_partition(n, [&](const Partition& lam) { acc.add_term(partition_durfee(lam), 1); });
    return acc.principal_part();
}

ExactPolynomial parts_counts_oracle(long n)
{
    LaurentPolynomial acc;
    for_each_partition(n,
                       [&](const Partition& lam) { acc.add_term(static_cast<long>(lam.size()), 1); });
    return acc.principal_part();
}

ExactPolynomial family_poly(FamilyId f, long n)
{
    switch (f) {
        case FamilyId::Taylor: return taylor_poly(n);
        case FamilyId::Parts: return parts_poly(n);
        case FamilyId::Rank: return rank_poly(n).principal;
        case FamilyId::Crank: return crank_poly(n).principal;
        case FamilyId::Durfee: return durfee_poly(n);
    }
    throw std::logic_error("unreachable");
}

}  // namespace parzero
