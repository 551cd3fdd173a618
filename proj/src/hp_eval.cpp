#include "parzero/hp/eval.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace parzero {

namespace {

double safe_log2(double v) { return std::log2(v); }

}  // namespace

EvalResult eval_P_factors(const HPComplex& x, long factors)
{
    mpfr_prec_t p = x.precision();
    double ax = x.abs().to_double();
    if (ax >= 1.0) throw std::domain_error("eval_P: |x| must be < 1");
    HPComplex one(1.0, 0.0, p);
    HPComplex prod = one;
    HPComplex xn = one;
    for (long n = 1; n <= factors; ++n) {
        xn = xn * x;
        prod = prod * (one - xn);
    }
    EvalResult r{one / prod, 0.0, factors, true};
    // log-product tail: sum_{n>N} |x|^n / (1-|x|) on the log terms
    double tail = std::pow(ax, static_cast<double>(factors + 1)) / ((1.0 - ax) * (1.0 - ax));
    r.error_bound = r.value.abs().to_double() * (std::expm1(tail < 700 ? tail : 700));
    return r;
}

EvalResult eval_P(const HPComplex& x, double tol)
{
    if (tol <= 0) throw std::invalid_argument("eval_P: tol must be > 0");
    double ax = x.abs().to_double();
    if (ax >= 1.0) throw std::domain_error("eval_P: |x| must be < 1");
    if (x.is_zero()) {
        EvalResult r{HPComplex(1.0, 0.0, x.precision()), 0.0, 1, false};
        return r;
    }
    // |x|^{N+1} / (1-|x|)^2 <= tol/2
    double logx = safe_log2(ax);
    double target = safe_log2(tol / 2.0) + 2.0 * safe_log2(1.0 - ax);
    long N = static_cast<long>(target / logx) + 2;
    if (N < 4) N = 4;
    auto r = eval_P_factors(x, N);
    r.heuristic_bound = false;
    return r;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers, exact: B_m = -(1/(m+1)) sum_{j<m} C(m+1,j) B_j.
// ---------------------------------------------------------------------------

namespace {
std::vector<mpq_class> g_bernoulli{mpq_class(1)};
std::mutex g_bernoulli_mu;
}  // namespace

mpq_class bernoulli_exact(unsigned k)
{
    std::lock_guard<std::mutex> lock(g_bernoulli_mu);
    while (g_bernoulli.size() <= k) {
        unsigned m = static_cast<unsigned>(g_bernoulli.size());
        mpq_class s = 0;
        BigInt binom = 1;  // C(m+1, j) built incrementally
        for (unsigned j = 0; j < m; ++j) {
            s += mpq_class(binom) * g_bernoulli[j];
            binom = binom * static_cast<long>(m + 1 - j) / static_cast<long>(j + 1);
        }
        mpq_class b = -s / mpq_class(static_cast<long>(m + 1));
        b.canonicalize();
        g_bernoulli.push_back(b);
    }
    return g_bernoulli[k];
}

// ---------------------------------------------------------------------------
// Dilogarithm
// ---------------------------------------------------------------------------

namespace {

HPComplex dilog_series(const HPComplex& x)
{
    mpfr_prec_t p = x.precision();
    double ax = x.abs().to_double();
    HPComplex sum(p);
    HPComplex term(1.0, 0.0, p);
    long nmax = static_cast<long>(static_cast<double>(p + 16) / -safe_log2(ax)) + 2;
    HPReal t(p);
    for (long n = 1; n <= nmax; ++n) {
        term = term * x;
        unsigned long nn = static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
        mpfr_div_ui(t.raw(), term.real().raw(), nn, MPFR_RNDN);
        sum.real() += t;
        mpfr_div_ui(t.raw(), term.imag().raw(), nn, MPFR_RNDN);
        sum.imag() += t;
    }
    return sum;
}

// Li2(1 - e^{-w}) = sum_{k>=0} B_k w^{k+1} / (k! (k+1)), |w| < 2 pi.
HPComplex dilog_log_series(const HPComplex& w)
{
    mpfr_prec_t p = w.precision();
    double aw = w.abs().to_double();
    double ratio = aw / (2.0 * 3.14159265358979);
    long kmax = static_cast<long>(static_cast<double>(p + 32) / -safe_log2(ratio)) + 8;
    HPComplex sum(p);
    HPComplex wp = w;       // w^{k+1}
    BigInt factk = 1;       // k!
    for (long k = 0; k <= kmax; ++k) {
        if (k > 0) factk *= k;
        if (k <= 1 || k % 2 == 0) {
            mpq_class b = bernoulli_exact(static_cast<unsigned>(k));
            mpq_class coef = b / (mpq_class(factk) * mpq_class(static_cast<long>(k + 1)));
            HPReal c(p);
            mpfr_set_q(c.raw(), coef.get_mpq_t(), MPFR_RNDN);
            sum = sum + c * wp;
        }
        wp = wp * w;
    }
    return sum;
}

}  // namespace

HPComplex dilog(const HPComplex& x)
{
    mpfr_prec_t p = x.precision();
    double ax = x.abs().to_double();
    if (ax > 1.0 + 1e-12) throw std::domain_error("dilog: |x| must be <= 1");
    if (x.is_zero()) return HPComplex(p);
    HPComplex one(1.0, 0.0, p);
    if (x.imag().is_zero() && x.real() == HPReal(1L, p)) {
        // Li2(1) = pi^2/6
        HPReal pi = HPReal::pi(p);
        return HPComplex(pi * pi / HPReal(6L, p), HPReal(0L, p));
    }
    if (ax <= 0.5) return dilog_series(x);
    if (x.real().to_double() <= 0.5) {
        HPComplex w = -log(one - x);
        return dilog_log_series(w);
    }
    // reflection into the left region
    HPComplex omx = one - x;
    HPReal pi = HPReal::pi(p);
    HPComplex pi2_6 = HPComplex(pi * pi / HPReal(6L, p), HPReal(0L, p));
    HPComplex rest = (omx.abs().to_double() <= 0.5) ? dilog_series(omx)
                                                    : dilog_log_series(-log(x));
    return pi2_6 - log(x) * log(omx) - rest;
}

double modular_check(const HPComplex& tau, long q_order)
{
    mpfr_prec_t p = tau.precision();
    if (tau.real().sign() <= 0) throw std::domain_error("modular_check: Re(tau) must be > 0");
    HPReal pi = HPReal::pi(p);
    HPReal two_pi = ldexp2(pi, 1);
    HPComplex one(1.0, 0.0, p);
    HPComplex x1 = exp(-(HPComplex::from_real(two_pi) * tau));
    HPComplex x2 = exp(-(HPComplex::from_real(two_pi) / tau));
    if (x1.abs().to_double() > 1.0 - 1e-6 || x2.abs().to_double() > 1.0 - 1e-6)
        throw std::domain_error("modular_check: both arguments must satisfy |q| <= 1 - 1e-6");
    if (q_order < 4) q_order = 4;
    HPComplex lhs = eval_P_factors(x1, q_order).value;
    HPComplex rhs_p = eval_P_factors(x2, q_order).value;
    // psi(tau) = sqrt(tau) exp[(pi/12)(1/tau - tau)]
    HPComplex psi = sqrt(tau) * exp(HPComplex::from_real(pi / HPReal(12L, p)) * (one / tau - tau));
    HPComplex diff = lhs - psi * rhs_p;
    return (diff.abs() / lhs.abs()).to_double();
}

HPComplex eval_poly(const ExactPolynomial& p, const HPComplex& x)
{
    mpfr_prec_t prec = x.precision();
    std::size_t need = bit_length(p.max_abs_coeff()) + 64;
    if (static_cast<std::size_t>(prec) < need)
        throw std::invalid_argument("eval_poly: insufficient precision for coefficient size (need " +
                                    std::to_string(need) + " bits)");
    HPComplex v(prec);
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        v = v * x;
        if (c[k] != 0) {
            HPReal ck(c[k], prec);
            v = HPComplex(v.real() + ck, v.imag());
        }
    }
    return v;
}

HPReal eval_poly_abs(const ExactPolynomial& p, const HPReal& abs_x)
{
    mpfr_prec_t prec = abs_x.precision();
    HPReal v(0L, prec);
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        v *= abs_x;
        if (c[k] != 0) {
            HPReal a(c[k], prec);
            mpfr_abs(a.raw(), a.raw(), MPFR_RNDN);
            v += a;
        }
    }
    return v;
}

}  // namespace parzero
