#pragma once

#include "parzero/hp/complex.hpp"
#include "parzero/polynomial.hpp"

namespace parzero {

// Value of a truncated evaluation together with a tail/rounding bound.
struct EvalResult {
    HPComplex value;
    double error_bound = 0.0;  // absolute; heuristic_bound marks non-rigorous cases
    long terms_used = 1;
    bool heuristic_bound = false;
};

// Euler product P(x) = prod_{n>=1} 1/(1-x^n), |x| <= 1 - delta.
// The factor count is chosen from the geometric tail so the relative
// truncation error is below tol; error_bound reports it in absolute terms.
EvalResult eval_P(const HPComplex& x, double tol);

// Same, with an explicit number of product factors (used by modular_check).
EvalResult eval_P_factors(const HPComplex& x, long factors);

// Principal-branch dilogarithm on the closed unit disk.
//   |x| <= 1/2          direct series sum x^n/n^2
//   Re x <= 1/2         series in w = -log(1-x) with Bernoulli coefficients
//   otherwise           reflection Li2(x) = pi^2/6 - log(x)log(1-x) - Li2(1-x)
// |x| > 1 is a domain error (no analytic continuation).
HPComplex dilog(const HPComplex& x);

// Relative residual of P(e^{-2 pi tau}) = psi(tau) P(e^{-2 pi / tau}),
// psi(tau) = sqrt(tau) exp[(pi/12)(1/tau - tau)], with q_order product factors
// on each side. Requires Re(tau) > 0 and both arguments inside the disk.
double modular_check(const HPComplex& tau, long q_order);

// Horner evaluation with exact coefficients rounded at the precision of x.
// Requires precision(x) >= bit_length(max |coeff|) + 64.
HPComplex eval_poly(const ExactPolynomial& p, const HPComplex& x);

// Exact-coefficient magnitude sum  sum_k |a_k| |x|^k  at the precision of x.
HPReal eval_poly_abs(const ExactPolynomial& p, const HPReal& abs_x);

// Bernoulli number B_k as an exact rational, cached (thread-safe).
mpq_class bernoulli_exact(unsigned k);

}  // namespace parzero
