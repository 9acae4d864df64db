#include "ramv/bigcomplex.hpp"

#include "ramv/errors.hpp"

namespace ramv {

namespace {
mpfr_prec_t join2(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}
} // namespace

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
    mpfr_prec_t p = join2(re_, im_);
    if (re_.prec() != p) re_ = re_.to_prec(p);
    if (im_.prec() != p) im_ = im_.to_prec(p);
}

BigComplex::BigComplex(BigFloat re) : re_(std::move(re)), im_(re_.prec()) {
    mpfr_set_zero(im_.raw(), 1);
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
}
BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
}
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    if (b.is_zero()) throw DomainError("complex division by zero");
    if (b.im_.is_zero()) return BigComplex(a.re_ / b.re_, a.im_ / b.re_);
    // Scale by conj(b)/|b|^2; the working guard absorbs the extra rounding.
    BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
    return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                      (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

BigComplex BigComplex::operator-() const { return BigComplex(-re_, -im_); }

BigComplex operator+(const BigComplex& a, const BigFloat& b) { return BigComplex(a.re_ + b, a.im_.to_prec(join2(a.im_, b))); }
BigComplex operator-(const BigComplex& a, const BigFloat& b) { return BigComplex(a.re_ - b, a.im_.to_prec(join2(a.im_, b))); }
BigComplex operator*(const BigComplex& a, const BigFloat& b) { return BigComplex(a.re_ * b, a.im_ * b); }
BigComplex operator/(const BigComplex& a, const BigFloat& b) {
    if (b.is_zero()) throw DomainError("complex division by zero");
    return BigComplex(a.re_ / b, a.im_ / b);
}
BigComplex operator+(const BigComplex& a, long b) { return BigComplex(a.re_ + b, a.im_); }
BigComplex operator-(const BigComplex& a, long b) { return BigComplex(a.re_ - b, a.im_); }
BigComplex operator*(const BigComplex& a, long b) { return BigComplex(a.re_ * b, a.im_ * b); }
BigComplex operator/(const BigComplex& a, long b) {
    if (b == 0) throw DomainError("complex division by zero");
    return BigComplex(a.re_ / b, a.im_ / b);
}
BigComplex operator-(long a, const BigComplex& b) { return BigComplex(a - b.re_, -b.im_); }
BigComplex operator/(long a, const BigComplex& b) {
    return BigComplex(BigFloat::from_long(a, b.prec())) / b;
}

// Principal branch via the stable algebraic form; never calls atan2, so the
// result is exact on the axes (sqrt(-4) = 2i with no 1e-… drift in Re).
BigComplex sqrt(const BigComplex& a) {
    mpfr_prec_t p = a.prec();
    if (a.is_zero()) return BigComplex(p);
    BigFloat zero = BigFloat::from_long(0, p);
    if (a.im_.is_zero()) {
        if (!a.re_.is_negative()) return BigComplex(sqrt(a.re_), zero);
        return BigComplex(zero, sqrt(-a.re_));
    }
    BigFloat r = abs(a);
    if (!a.re_.is_negative()) {
        BigFloat u = sqrt((r + a.re_) / 2);
        return BigComplex(u, a.im_ / (u * 2));
    }
    BigFloat v = sqrt((r - a.re_) / 2);
    if (a.im_.is_negative()) v = -v;
    return BigComplex(a.im_ / (v * 2), v);
}

BigComplex exp(const BigComplex& a) {
    BigFloat m = exp(a.re_);
    return BigComplex(m * cos(a.im_), m * sin(a.im_));
}

BigComplex log(const BigComplex& a) {
    if (a.is_zero()) throw DomainError("log of zero");
    return BigComplex(log(abs(a)), arg(a));
}

BigComplex sin(const BigComplex& a) {
    return BigComplex(sin(a.re_) * cosh(a.im_), cos(a.re_) * sinh(a.im_));
}

BigComplex cos(const BigComplex& a) {
    return BigComplex(cos(a.re_) * cosh(a.im_), -(sin(a.re_) * sinh(a.im_)));
}

BigComplex sinh(const BigComplex& a) {
    return BigComplex(sinh(a.re_) * cos(a.im_), cosh(a.re_) * sin(a.im_));
}

BigComplex cosh(const BigComplex& a) {
    return BigComplex(cosh(a.re_) * cos(a.im_), sinh(a.re_) * sin(a.im_));
}

BigComplex pow_si(const BigComplex& a, long e) {
    mpfr_prec_t p = a.prec();
    if (e == 0) return BigComplex(BigFloat::from_long(1, p));
    if (a.is_zero()) {
        if (e < 0) throw DomainError("0 to a negative power");
        return BigComplex(p);
    }
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    BigComplex base = a;
    BigComplex acc(BigFloat::from_long(1, p));
    while (n) {
        if (n & 1UL) acc *= base;
        n >>= 1UL;
        if (n) base *= base;
    }
    if (e < 0) return BigComplex(BigFloat::from_long(1, p)) / acc;
    return acc;
}

BigComplex pow(const BigComplex& a, const BigComplex& b) {
    if (a.is_zero()) {
        if (b.is_zero()) return BigComplex(BigFloat::from_long(1, a.prec()));
        return BigComplex(a.prec());
    }
    return exp(b * log(a));
}

} // namespace ramv
