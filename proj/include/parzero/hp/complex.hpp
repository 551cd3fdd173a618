#pragma once

#include <algorithm>
#include <string>

#include "parzero/hp/real.hpp"

namespace parzero {

// Arbitrary-precision complex number. Both components always carry the same
// precision. sqrt/log use the principal branch with the cut on the negative
// real axis; sqrt(-r + 0i) = +i sqrt(r).
class HPComplex {
public:
    explicit HPComplex(mpfr_prec_t prec = HPReal::kMinPrec) : re_(prec), im_(prec) {}
    HPComplex(HPReal re, HPReal im) : re_(std::move(re)), im_(std::move(im))
    {
        match_precision();
    }
    HPComplex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
    static HPComplex from_real(const HPReal& re)
    {
        return HPComplex(re, HPReal(0L, re.precision()));
    }

    const HPReal& real() const { return re_; }
    const HPReal& imag() const { return im_; }
    HPReal& real() { return re_; }
    HPReal& imag() { return im_; }
    mpfr_prec_t precision() const { return re_.precision(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    HPComplex conj() const { return HPComplex(re_, -im_); }

    friend HPComplex operator+(const HPComplex& a, const HPComplex& b)
    {
        return HPComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend HPComplex operator-(const HPComplex& a, const HPComplex& b)
    {
        return HPComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend HPComplex operator*(const HPComplex& a, const HPComplex& b)
    {
        return HPComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend HPComplex operator*(const HPReal& s, const HPComplex& b)
    {
        return HPComplex(s * b.re_, s * b.im_);
    }
    friend HPComplex operator/(const HPComplex& a, const HPComplex& b)
    {
        HPReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return HPComplex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                         (a.im_ * b.re_ - a.re_ * b.im_) / d);
    }
    HPComplex operator-() const { return HPComplex(-re_, -im_); }

    HPReal abs() const { return hypot(re_, im_); }
    HPReal norm2() const { return re_ * re_ + im_ * im_; }
    HPReal arg() const { return atan2(im_, re_); }

    double to_double_re() const { return re_.to_double(); }
    double to_double_im() const { return im_.to_double(); }

private:
    void match_precision()
    {
        if (re_.precision() != im_.precision()) {
            mpfr_prec_t p = std::max(re_.precision(), im_.precision());
            HPReal r(p), i(p);
            mpfr_set(r.raw(), re_.raw(), MPFR_RNDN);
            mpfr_set(i.raw(), im_.raw(), MPFR_RNDN);
            re_ = std::move(r);
            im_ = std::move(i);
        }
    }
    HPReal re_, im_;
};

HPComplex sqrt(const HPComplex& z);
HPComplex exp(const HPComplex& z);
HPComplex log(const HPComplex& z);
HPComplex pow_int(const HPComplex& z, long e);

}  // namespace parzero
