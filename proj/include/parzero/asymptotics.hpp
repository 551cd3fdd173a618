#pragma once

#include "parzero/hp/complex.hpp"
#include "parzero/hp/eval.hpp"
#include "parzero/partitions.hpp"
#include "parzero/polynomial.hpp"

namespace parzero {

// Exact-vs-approximation comparison record.
struct AsymptoticReport {
    long n = 0;
    HPComplex x;
    HPComplex exact;
    HPComplex approx;
    double rel_error = 0.0;  // |exact - approx| / |exact|
};

AsymptoticReport make_report(long n, const HPComplex& x, const HPComplex& exact,
                             const HPComplex& approx);

// a = pi sqrt(2/3), lambda_n = sqrt(n - 1/24), m = 2 pi (n - 1/24),
// alpha = sqrt(pi / 12m), sigma = sqrt(pi m / 12). Satisfies 2 sigma = a lambda_n
// and pi/(12 alpha) = m alpha = sigma.
struct SaddleConstants {
    SaddleConstants(long n, mpfr_prec_t prec);
    HPReal a, lambda_n, m, alpha, sigma;
};

// exp(pi sqrt(2n/3)) / (4 n sqrt(3)): the leading Hardy-Ramanujan term.
HPReal hr_approx(long n, mpfr_prec_t prec);

// s_n(x) ~ (x^{n+1}/(x-1)) e^{a lambda_n} lambda_n^{-2} / (4 sqrt 3), |x| > 1.
HPComplex sn_approx(long n, const HPComplex& x);

// F_n(x) ~ x^n P(1, 1/x), |x| > 1.
HPComplex fn_outer_approx(long n, const HPComplex& x);

// w_{h,k} = (1/2k) log(1-x^k) + sum_{l : k does not divide l} (x^l/l) / (e^{-2 pi i l h/k} - 1).
// Admissible (h,k): (0,1), (1,2), (1,3), (2,3); gcd(h,k) = 1; |x| < 1.
HPComplex w_hk(const HPComplex& x, int h, int k, double tol);

// I_k = (1/sqrt(pi)) n^{-3/4} [sqrt(Li2(x^k))/k]^{1/2} exp(2 sqrt(n) sqrt(Li2(x^k))/k).
HPComplex I_k(long n, const HPComplex& x, int k);

// Four-term interior expansion
//   F_n(x) ~ e^{w01} I_1 + (-1)^n e^{w12} I_2 + e^{-2 pi i n/3} e^{w13} I_3
//            + e^{-4 pi i n/3} e^{w23} I_3
// for x in the open upper unit disk.
HPComplex fn_inner_approx(long n, const HPComplex& x);

// Leading single-term interior value e^{w01} I_1 (dominant inside R(1)).
HPComplex fn_inner_leading(long n, const HPComplex& x);

// Exact evaluations used as the comparison side of the reports.
HPComplex sn_exact(long n, const HPComplex& x);
HPComplex fn_exact(long n, const HPComplex& x, const PartsTriangle& tri);

}  // namespace parzero
