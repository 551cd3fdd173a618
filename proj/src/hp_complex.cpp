#include "parzero/hp/complex.hpp"

namespace parzero {

HPComplex sqrt(const HPComplex& z)
{
    mpfr_prec_t p = z.precision();
    if (z.is_zero()) return HPComplex(p);
    if (z.imag().is_zero()) {
        if (z.real().sign() >= 0) return HPComplex(sqrt(z.real()), HPReal(0L, p));
        // cut approached from above: sqrt(-r) = +i sqrt(r)
        return HPComplex(HPReal(0L, p), sqrt(-z.real()));
    }
    // u = sqrt((|z| + |re|)/2); pair with im/(2u)
    HPReal a = z.abs();
    HPReal are = abs(z.real());
    HPReal u = sqrt(ldexp2(a + are, -1));
    HPReal w = ldexp2(z.imag() / u, -1);
    if (z.real().sign() >= 0) return HPComplex(u, w);
    if (z.imag().sign() >= 0) return HPComplex(ldexp2(z.imag() / u, -1), u);
    return HPComplex(ldexp2(-z.imag() / u, -1), -u);
}

HPComplex exp(const HPComplex& z)
{
    HPReal m = exp(z.real());
    return HPComplex(m * cos(z.imag()), m * sin(z.imag()));
}

HPComplex log(const HPComplex& z)
{
    return HPComplex(log(z.abs()), z.arg());
}

HPComplex pow_int(const HPComplex& z, long e)
{
    mpfr_prec_t p = z.precision();
    HPComplex r(1.0, 0.0, p);
    if (e == 0) return r;
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    HPComplex base = z;
    while (k) {
        if (k & 1UL) r = r * base;
        base = base * base;
        k >>= 1;
    }
    if (inv) return HPComplex(1.0, 0.0, p) / r;
    return r;
}

}  // namespace parzero
