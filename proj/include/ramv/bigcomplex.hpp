#pragma once

#include <string>

#include "ramv/bigfloat.hpp"

namespace ramv {

// Complex value over BigFloat.  Both parts always share one precision.
// sqrt/log/pow use the principal branch: Re sqrt >= 0, Im log in (-pi, pi].
class BigComplex {
public:
    BigComplex() = default;
    explicit BigComplex(mpfr_prec_t bits) : re_(bits), im_(bits) {
        mpfr_set_zero(re_.raw(), 1);
        mpfr_set_zero(im_.raw(), 1);
    }
    BigComplex(BigFloat re, BigFloat im);
    explicit BigComplex(BigFloat re);

    static BigComplex from_long(long re, mpfr_prec_t bits) {
        return BigComplex(BigFloat::from_long(re, bits), BigFloat::from_long(0, bits));
    }
    static BigComplex i_unit(mpfr_prec_t bits) {
        return BigComplex(BigFloat::from_long(0, bits), BigFloat::from_long(1, bits));
    }

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }
    BigComplex to_prec(mpfr_prec_t bits) const { return BigComplex(re_.to_prec(bits), im_.to_prec(bits)); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_finite() const {
        return !re_.is_nan() && !re_.is_inf() && !im_.is_nan() && !im_.is_inf();
    }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    BigComplex operator-() const;
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }

    friend BigComplex operator+(const BigComplex& a, const BigFloat& b);
    friend BigComplex operator-(const BigComplex& a, const BigFloat& b);
    friend BigComplex operator*(const BigComplex& a, const BigFloat& b);
    friend BigComplex operator/(const BigComplex& a, const BigFloat& b);
    friend BigComplex operator+(const BigComplex& a, long b);
    friend BigComplex operator-(const BigComplex& a, long b);
    friend BigComplex operator*(const BigComplex& a, long b);
    friend BigComplex operator/(const BigComplex& a, long b);
    friend BigComplex operator*(long a, const BigComplex& b) { return b * a; }
    friend BigComplex operator-(long a, const BigComplex& b);
    friend BigComplex operator/(long a, const BigComplex& b);

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

    friend BigComplex conj(const BigComplex& a) { return BigComplex(a.re_, -a.im_); }
    friend BigFloat abs(const BigComplex& a) { return hypot(a.re_, a.im_); }
    friend BigFloat arg(const BigComplex& a) { return atan2(a.im_, a.re_); }

    friend BigComplex sqrt(const BigComplex& a);
    friend BigComplex exp(const BigComplex& a);
    friend BigComplex log(const BigComplex& a);
    friend BigComplex sin(const BigComplex& a);
    friend BigComplex cos(const BigComplex& a);
    friend BigComplex sinh(const BigComplex& a);
    friend BigComplex cosh(const BigComplex& a);
    friend BigComplex tan(const BigComplex& a) { return sin(a) / cos(a); }
    friend BigComplex cot(const BigComplex& a) { return cos(a) / sin(a); }
    friend BigComplex coth(const BigComplex& a) { return cosh(a) / sinh(a); }
    friend BigComplex tanh(const BigComplex& a) { return sinh(a) / cosh(a); }
    friend BigComplex pow_si(const BigComplex& a, long e);
    friend BigComplex pow(const BigComplex& a, const BigComplex& b); // exp(b log a), a != 0

    std::string to_string(int digits = 0) const {
        return "(" + re_.to_string(digits) + ", " + im_.to_string(digits) + ")";
    }

private:
    BigFloat re_, im_;
};

} // namespace ramv
