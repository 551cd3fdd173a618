#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "parzero/bigint.hpp"

namespace parzero {

// Thin value-semantics wrapper around mpfr_t with explicit precision.
// All rounding is to nearest. Binary operations carry max(prec_a, prec_b).
class HPReal {
public:
    static constexpr mpfr_prec_t kMinPrec = 64;

    explicit HPReal(mpfr_prec_t prec = kMinPrec) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
    HPReal(double d, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_d(v_, d, MPFR_RNDN); }
    HPReal(long i, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_si(v_, i, MPFR_RNDN); }
    HPReal(const BigInt& z, mpfr_prec_t prec)
    {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    HPReal(const std::string& s, mpfr_prec_t prec)
    {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
    }

    HPReal(const HPReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    HPReal(HPReal&& o) noexcept
    {
        mpfr_init2(v_, kMinPrec);
        mpfr_swap(v_, o.v_);
    }
    HPReal& operator=(const HPReal& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    HPReal& operator=(HPReal&& o) noexcept
    {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~HPReal() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 0) const
    {
        if (digits <= 0) digits = static_cast<int>(static_cast<double>(precision()) * 0.30103) - 2;
        if (digits < 8) digits = 8;
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    friend HPReal operator+(const HPReal& a, const HPReal& b) { return bin(a, b, mpfr_add); }
    friend HPReal operator-(const HPReal& a, const HPReal& b) { return bin(a, b, mpfr_sub); }
    friend HPReal operator*(const HPReal& a, const HPReal& b) { return bin(a, b, mpfr_mul); }
    friend HPReal operator/(const HPReal& a, const HPReal& b) { return bin(a, b, mpfr_div); }
    HPReal operator-() const
    {
        HPReal r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    HPReal& operator+=(const HPReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator-=(const HPReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator*=(const HPReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator/=(const HPReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const HPReal& a, const HPReal& b)
    {
        return mpfr_greaterequal_p(a.v_, b.v_);
    }
    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_); }

    static HPReal pi(mpfr_prec_t prec)
    {
        HPReal r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return p < kMinPrec ? kMinPrec : p; }
    template <typename F>
    static HPReal bin(const HPReal& a, const HPReal& b, F f)
    {
        HPReal r(std::max(a.precision(), b.precision()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

inline HPReal sqrt(const HPReal& a)
{
    HPReal r(a.precision());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline HPReal log(const HPReal& a)
{
    HPReal r(a.precision());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline HPReal exp(const HPReal& a)
{
    HPReal r(a.precision());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline HPReal abs(const HPReal& a)
{
    HPReal r(a.precision());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline HPReal cos(const HPReal& a)
{
    HPReal r(a.precision());
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline HPReal sin(const HPReal& a)
{
    HPReal r(a.precision());
    mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline HPReal atan2(const HPReal& y, const HPReal& x)
{
    HPReal r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline HPReal hypot(const HPReal& x, const HPReal& y)
{
    HPReal r(std::max(y.precision(), x.precision()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline HPReal pow_si(const HPReal& a, long e)
{
    HPReal r(a.precision());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline HPReal ldexp2(const HPReal& a, long e)  // a * 2^e
{
    HPReal r(a.precision());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

}  // namespace parzero
