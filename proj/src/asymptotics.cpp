#include "parzero/asymptotics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "parzero/families.hpp"

namespace parzero {

AsymptoticReport make_report(long n, const HPComplex& x, const HPComplex& exact,
                             const HPComplex& approx)
{
    AsymptoticReport r;
    r.n = n;
    r.x = x;
    r.exact = exact;
    r.approx = approx;
    HPReal ae = exact.abs();
    r.rel_error = ae.is_zero() ? std::numeric_limits<double>::infinity()
                               : ((exact - approx).abs() / ae).to_double();
    return r;
}

SaddleConstants::SaddleConstants(long n, mpfr_prec_t prec)
    : a(prec), lambda_n(prec), m(prec), alpha(prec), sigma(prec)
{
    HPReal pi = HPReal::pi(prec);
    HPReal two_thirds = HPReal(2L, prec) / HPReal(3L, prec);
    a = pi * sqrt(two_thirds);
    HPReal nshift = HPReal(n, prec) - HPReal(1L, prec) / HPReal(24L, prec);
    lambda_n = sqrt(nshift);
    m = ldexp2(pi, 1) * nshift;
    alpha = sqrt(pi / (HPReal(12L, prec) * m));
    sigma = sqrt(pi * m / HPReal(12L, prec));
}

HPReal hr_approx(long n, mpfr_prec_t prec)
{
    if (n < 1) throw std::invalid_argument("hr_approx: n must be >= 1");
    HPReal pi = HPReal::pi(prec);
    HPReal arg = pi * sqrt(HPReal(2 * n, prec) / HPReal(3L, prec));
    return exp(arg) / (HPReal(4 * n, prec) * sqrt(HPReal(3L, prec)));
}

HPComplex sn_approx(long n, const HPComplex& x)
{
    mpfr_prec_t p = x.precision();
    if (x.abs() <= HPReal(1L, p)) throw std::domain_error("sn_approx: requires |x| > 1");
    SaddleConstants sc(n, p);
    HPComplex one(1.0, 0.0, p);
    HPReal amp = exp(sc.a * sc.lambda_n) /
                 (sc.lambda_n * sc.lambda_n * HPReal(4L, p) * sqrt(HPReal(3L, p)));
    return pow_int(x, n + 1) / (x - one) * HPComplex::from_real(amp);
}

HPComplex fn_outer_approx(long n, const HPComplex& x)
{
    mpfr_prec_t p = x.precision();
    if (x.abs() <= HPReal(1L, p)) throw std::domain_error("fn_outer_approx: requires |x| > 1");
    HPComplex one(1.0, 0.0, p);
    HPComplex inv = one / x;
    double tol = std::exp2(-static_cast<double>(p) / 2.0);
    return pow_int(x, n) * eval_P(inv, tol).value;
}

HPComplex w_hk(const HPComplex& x, int h, int k, double tol)
{
    mpfr_prec_t p = x.precision();
    bool admissible = (h == 0 && k == 1) || (h == 1 && k == 2) || (h == 1 && k == 3) ||
                      (h == 2 && k == 3);
    if (!admissible) throw std::invalid_argument("w_hk: (h,k) must be one of (0,1),(1,2),(1,3),(2,3)");
    if (std::gcd(h, k) != 1 && !(h == 0 && k == 1))
        throw std::invalid_argument("w_hk: gcd(h,k) must be 1");
    double ax = x.abs().to_double();
    if (ax >= 1.0) throw std::domain_error("w_hk: requires |x| < 1");
    if (!(tol > 0)) throw std::invalid_argument("w_hk: tol must be > 0");

    HPComplex one(1.0, 0.0, p);
    HPComplex total = log(one - pow_int(x, k)) / HPComplex(2.0 * k, 0.0, p);
    if (k == 1) return total;  // every l is divisible by 1: empty sum
    if (x.is_zero()) return HPComplex(p);

    // residue factors 1/(e^{-2 pi i l h / k} - 1) depend on l mod k
    std::vector<HPComplex> zeta;
    double min_gap = 2.0;
    HPReal two_pi = ldexp2(HPReal::pi(p), 1);
    for (int r = 1; r < k; ++r) {
        HPReal ang = -(two_pi * HPReal(static_cast<long>(r) * h, p)) / HPReal(static_cast<long>(k), p);
        HPComplex e(cos(ang), sin(ang));
        HPComplex den = e - one;
        min_gap = std::min(min_gap, den.abs().to_double());
        zeta.push_back(one / den);
    }
    // tail: sum_{l>L} |x|^l / (l min_gap)  <=  |x|^{L+1} / ((L+1) min_gap (1-|x|))
    long L = 8;
    while (std::pow(ax, static_cast<double>(L + 1)) /
               (static_cast<double>(L + 1) * min_gap * (1.0 - ax)) >
           tol / 2.0)
        ++L;

    HPComplex xl = one;
    HPReal t(p);
    HPComplex sum(p);
    for (long l = 1; l <= L; ++l) {
        xl = xl * x;
        if (l % k == 0) continue;
        HPComplex term = xl;
        mpfr_div_ui(t.raw(), term.real().raw(), static_cast<unsigned long>(l), MPFR_RNDN);
        HPReal re = t;
        mpfr_div_ui(t.raw(), term.imag().raw(), static_cast<unsigned long>(l), MPFR_RNDN);
        sum = sum + HPComplex(re, t) * zeta[static_cast<std::size_t>(l % k - 1)];
    }
    return total + sum;
}

HPComplex I_k(long n, const HPComplex& x, int k)
{
    mpfr_prec_t p = x.precision();
    if (k < 1 || k > 3) throw std::invalid_argument("I_k: k must be in {1,2,3}");
    if (n < 1) throw std::invalid_argument("I_k: n must be >= 1");
    if (x.abs().to_double() >= 1.0) throw std::domain_error("I_k: requires |x| < 1");
    if (x.is_zero()) return HPComplex(p);
    HPComplex s = sqrt(dilog(pow_int(x, k)));
    HPComplex sk = s / HPComplex(static_cast<double>(k), 0.0, p);
    HPReal n34 = pow_si(HPReal(n, p), 3);
    n34 = sqrt(sqrt(n34));  // n^{3/4}
    HPReal pref = HPReal(1L, p) / (sqrt(HPReal::pi(p)) * n34);
    return HPComplex::from_real(pref) * sqrt(sk) *
           exp(HPComplex::from_real(ldexp2(sqrt(HPReal(n, p)), 1)) * sk);
}

namespace {

void check_inner_domain(const HPComplex& x)
{
    if (x.imag().to_double() < 0.0)
        throw std::domain_error("fn_inner_approx: requires Im(x) >= 0");
    if (x.abs().to_double() > 1.0 - 1e-6)
        throw std::domain_error("fn_inner_approx: requires |x| <= 1 - 1e-6");
}

}  // namespace

HPComplex fn_inner_leading(long n, const HPComplex& x)
{
    check_inner_domain(x);
    mpfr_prec_t p = x.precision();
    double tol = std::exp2(-static_cast<double>(p) / 2.0);
    return exp(w_hk(x, 0, 1, tol)) * I_k(n, x, 1);
}

HPComplex fn_inner_approx(long n, const HPComplex& x)
{
    check_inner_domain(x);
    mpfr_prec_t p = x.precision();
    double tol = std::exp2(-static_cast<double>(p) / 2.0);
    HPComplex t1 = exp(w_hk(x, 0, 1, tol)) * I_k(n, x, 1);
    HPComplex t2 = exp(w_hk(x, 1, 2, tol)) * I_k(n, x, 2);
    if (n % 2 == 1) t2 = -t2;
    HPComplex i3 = I_k(n, x, 3);
    HPReal two_pi = ldexp2(HPReal::pi(p), 1);
    HPReal ph1 = -(two_pi * HPReal(n % 3, p)) / HPReal(3L, p);
    HPReal ph2 = -(two_pi * HPReal((2 * n) % 3, p)) / HPReal(3L, p);
    HPComplex t3 = HPComplex(cos(ph1), sin(ph1)) * exp(w_hk(x, 1, 3, tol)) * i3;
    HPComplex t4 = HPComplex(cos(ph2), sin(ph2)) * exp(w_hk(x, 2, 3, tol)) * i3;
    return t1 + t2 + t3 + t4;
}

HPComplex sn_exact(long n, const HPComplex& x)
{
    return eval_poly(taylor_poly(n), x);
}

HPComplex fn_exact(long n, const HPComplex& x, const PartsTriangle& tri)
{
    return eval_poly(parts_poly(n, tri), x);
}

}  // namespace parzero
