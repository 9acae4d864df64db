#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "ramv/precision.hpp"

namespace ramv {

// Arbitrary-precision real backed by mpfr_t.  Every value carries its own
// precision; binary operations allocate the result at the wider of the two
// operand precisions and round to nearest, so a computation at fixed working
// precision is bit-deterministic across runs and platforms.
class BigFloat {
public:
    BigFloat() : BigFloat(static_cast<mpfr_prec_t>(64)) {}
    explicit BigFloat(mpfr_prec_t bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_long(long v, mpfr_prec_t bits);
    static BigFloat from_double(double v, mpfr_prec_t bits);
    // Accepts plain decimal/scientific strings, optionally tagged "...@digits";
    // the tag fixes the parse precision unless an explicit bits override wins.
    static BigFloat from_string(std::string_view s, mpfr_prec_t bits = 0);
    static BigFloat pi(mpfr_prec_t bits);
    static BigFloat nan(mpfr_prec_t bits);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    BigFloat to_prec(mpfr_prec_t bits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(const BigFloat& a, long b);
    friend BigFloat operator-(const BigFloat& a, long b);
    friend BigFloat operator*(const BigFloat& a, long b);
    friend BigFloat operator/(const BigFloat& a, long b);
    friend BigFloat operator+(long a, const BigFloat& b) { return b + a; }
    friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
    friend BigFloat operator-(long a, const BigFloat& b);
    friend BigFloat operator/(long a, const BigFloat& b);

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend BigFloat abs(const BigFloat& a);
    friend BigFloat sqrt(const BigFloat& a); // a >= 0 required
    friend BigFloat exp(const BigFloat& a);
    friend BigFloat expm1(const BigFloat& a);
    friend BigFloat log(const BigFloat& a);
    friend BigFloat log1p(const BigFloat& a);
    friend BigFloat sin(const BigFloat& a);
    friend BigFloat cos(const BigFloat& a);
    friend BigFloat tan(const BigFloat& a);
    friend BigFloat sinh(const BigFloat& a);
    friend BigFloat cosh(const BigFloat& a);
    friend BigFloat tanh(const BigFloat& a);
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y);
    friend BigFloat pow_si(const BigFloat& a, long e);
    friend BigFloat pow(const BigFloat& a, const BigFloat& b); // a > 0
    friend BigFloat floor(const BigFloat& a);
    friend BigFloat round_nearest(const BigFloat& a);
    friend BigFloat fmod(const BigFloat& a, const BigFloat& b);
    friend BigFloat min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }

    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // log10 of |x| rounded toward -inf, i.e. the decimal magnitude; 0 -> very small.
    long mag10() const;

    // "d.ddd...e<exp>@<digits>"; digits defaults to the value's own precision.
    std::string to_string(int digits = 0) const;
    // Plain positional decimal with the given significant digits (CLI text output).
    std::string to_positional(int digits) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

// 10^e at the given precision; the workhorse for tolerance thresholds.
BigFloat tenpow(long e, mpfr_prec_t bits);

} // namespace ramv
