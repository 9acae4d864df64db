#include "ramv/bigfloat.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstring>

#include "ramv/errors.hpp"

namespace ramv {

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}
} // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
    mpfr_init2(v_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
    mpfr_set_nan(v_);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_long(long v, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double v, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_string(std::string_view s, mpfr_prec_t bits) {
    std::string body(s);
    auto at = body.find('@');
    if (at != std::string::npos) {
        int digits = 0;
        auto tail = body.substr(at + 1);
        auto res = std::from_chars(tail.data(), tail.data() + tail.size(), digits);
        if (res.ec != std::errc() || digits <= 0)
            throw DomainError("bad precision tag in number literal: " + body);
        if (bits == 0) bits = PrecisionContext::bits_for_digits(digits);
        body.erase(at);
    }
    if (bits == 0) bits = PrecisionContext::bits_for_digits(30);
    BigFloat r(bits);
    if (mpfr_set_str(r.v_, body.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("unparseable number literal: " + std::string(s));
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::nan(mpfr_prec_t bits) { return BigFloat(bits); }

BigFloat BigFloat::to_prec(mpfr_prec_t bits) const {
    BigFloat r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

#define RAMV_BINOP(op, fn)                                         \
    BigFloat operator op(const BigFloat& a, const BigFloat& b) {   \
        BigFloat r(join(a, b));                                    \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                           \
        return r;                                                  \
    }
RAMV_BINOP(+, mpfr_add)
RAMV_BINOP(-, mpfr_sub)
RAMV_BINOP(*, mpfr_mul)
RAMV_BINOP(/, mpfr_div)
#undef RAMV_BINOP

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat operator+(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
BigFloat operator-(long a, const BigFloat& b) {
    BigFloat r(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}
BigFloat operator/(long a, const BigFloat& b) {
    BigFloat r(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

#define RAMV_UNFN(name, fn)                 \
    BigFloat name(const BigFloat& a) {      \
        BigFloat r(a.prec());               \
        fn(r.v_, a.v_, MPFR_RNDN);          \
        return r;                           \
    }
RAMV_UNFN(abs, mpfr_abs)
RAMV_UNFN(exp, mpfr_exp)
RAMV_UNFN(expm1, mpfr_expm1)
RAMV_UNFN(log1p, mpfr_log1p)
RAMV_UNFN(sin, mpfr_sin)
RAMV_UNFN(cos, mpfr_cos)
RAMV_UNFN(tan, mpfr_tan)
RAMV_UNFN(sinh, mpfr_sinh)
RAMV_UNFN(cosh, mpfr_cosh)
RAMV_UNFN(tanh, mpfr_tanh)
#undef RAMV_UNFN

BigFloat sqrt(const BigFloat& a) {
    if (a.is_negative()) throw DomainError("sqrt of negative real");
    BigFloat r(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& a) {
    if (a.sign() <= 0 && !a.is_zero()) throw DomainError("log of non-positive real");
    BigFloat r(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(join(y, x));
    mpfr_atan2(r.raw(), y.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(join(x, y));
    mpfr_hypot(r.raw(), x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat pow_si(const BigFloat& a, long e) {
    BigFloat r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& a, const BigFloat& b) {
    if (a.sign() <= 0) throw DomainError("real pow requires positive base");
    BigFloat r(join(a, b));
    mpfr_pow(r.raw(), a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat floor(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_floor(r.v_, a.v_);
    return r;
}

BigFloat round_nearest(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_round(r.v_, a.v_);
    return r;
}

BigFloat fmod(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_fmod(r.raw(), a.v_, b.v_, MPFR_RNDN);
    return r;
}

long BigFloat::mag10() const {
    if (is_zero() || is_nan()) return -1000000000L;
    // mpfr exponent is base-2: |x| in [2^(e-1), 2^e).
    long e2 = static_cast<long>(mpfr_get_exp(v_));
    return static_cast<long>(std::floor(static_cast<double>(e2 - 1) * 0.30102999566398119));
}

std::string BigFloat::to_string(int digits) const {
    if (digits <= 0)
        digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) ;
    if (digits < 2) digits = 2;
    std::string tag = "@" + std::to_string(digits);
    if (is_nan()) return "nan" + tag;
    if (is_inf()) return (is_negative() ? "-inf" : "inf") + tag;
    if (is_zero()) return "0e0" + tag;
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    bool neg = !m.empty() && m[0] == '-';
    std::string ds = neg ? m.substr(1) : m;
    // Value is 0.ds * 10^e; present as d.ds * 10^(e-1).
    std::string out = (neg ? "-" : "");
    out += ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out + tag;
}

std::string BigFloat::to_positional(int digits) const {
    if (digits < 1) digits = 1;
    if (is_nan()) return "nan";
    if (is_inf()) return is_negative() ? "-inf" : "inf";
    if (is_zero()) return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    bool neg = !m.empty() && m[0] == '-';
    std::string ds = neg ? m.substr(1) : m;
    // Trim trailing zeros but keep at least one digit.
    while (ds.size() > 1 && ds.back() == '0') ds.pop_back();
    long ex = static_cast<long>(e); // value = 0.ds * 10^ex
    std::string out;
    if (ex <= -6 || ex > digits + 6) {
        out = ds.substr(0, 1);
        if (ds.size() > 1) out += "." + ds.substr(1);
        out += "e" + std::to_string(ex - 1);
    } else if (ex <= 0) {
        out = "0." + std::string(static_cast<size_t>(-ex), '0') + ds;
    } else if (static_cast<size_t>(ex) >= ds.size()) {
        out = ds + std::string(static_cast<size_t>(ex) - ds.size(), '0');
    } else {
        out = ds.substr(0, static_cast<size_t>(ex)) + "." + ds.substr(static_cast<size_t>(ex));
    }
    return (neg ? "-" : "") + out;
}

BigFloat tenpow(long e, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_si(r.raw(), e, MPFR_RNDN);
    mpfr_exp10(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

} // namespace ramv
