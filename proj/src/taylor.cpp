#include "ramv/taylor.hpp"

#include "ramv/errors.hpp"

namespace ramv {

namespace {
// Shifted copy with the constant term removed: u = a - a0.
TaylorSeries nilpotent(const TaylorSeries& a) {
    TaylorSeries u = a;
    u.coeff(0) = BigComplex(a.prec());
    return u;
}
} // namespace

TaylorSeries::TaylorSeries(size_t order, mpfr_prec_t bits)
    : bits_(bits), c_(order, BigComplex(bits)) {
    if (order == 0) throw DomainError("taylor series needs order >= 1");
}

BigComplex TaylorSeries::zero() const { return BigComplex(bits_); }

TaylorSeries TaylorSeries::variable(const BigComplex& n0, size_t order) {
    TaylorSeries t(order, n0.prec());
    t.c_[0] = n0;
    if (order > 1) t.c_[1] = BigComplex(BigFloat::from_long(1, n0.prec()));
    return t;
}

TaylorSeries TaylorSeries::constant(const BigComplex& value, size_t order) {
    TaylorSeries t(order, value.prec());
    t.c_[0] = value;
    return t;
}

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
    TaylorSeries r(std::min(a.order(), b.order()), std::max(a.prec(), b.prec()));
    for (size_t k = 0; k < r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) {
    TaylorSeries r(std::min(a.order(), b.order()), std::max(a.prec(), b.prec()));
    for (size_t k = 0; k < r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
    TaylorSeries r(std::min(a.order(), b.order()), std::max(a.prec(), b.prec()));
    for (size_t n = 0; n < r.order(); ++n) {
        BigComplex acc(r.prec());
        for (size_t k = 0; k <= n; ++k) acc += a.c_[k] * b.c_[n - k];
        r.c_[n] = acc;
    }
    return r;
}

TaylorSeries reciprocal(const TaylorSeries& a) {
    if (a.c_[0].is_zero()) throw DomainError("reciprocal of series with zero constant term");
    TaylorSeries r(a.order(), a.prec());
    BigComplex one(BigFloat::from_long(1, a.prec()));
    r.c_[0] = one / a.c_[0];
    for (size_t n = 1; n < a.order(); ++n) {
        BigComplex acc(a.prec());
        for (size_t k = 1; k <= n; ++k) acc += a.c_[k] * r.c_[n - k];
        r.c_[n] = -(acc / a.c_[0]);
    }
    return r;
}

TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) {
    return a * reciprocal(b);
}

TaylorSeries TaylorSeries::operator-() const {
    TaylorSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

TaylorSeries operator+(const TaylorSeries& a, const BigComplex& s) {
    TaylorSeries r = a;
    r.c_[0] += s;
    return r;
}
TaylorSeries operator-(const TaylorSeries& a, const BigComplex& s) {
    TaylorSeries r = a;
    r.c_[0] -= s;
    return r;
}
TaylorSeries operator*(const TaylorSeries& a, const BigComplex& s) {
    TaylorSeries r = a;
    for (auto& x : r.c_) x *= s;
    return r;
}
TaylorSeries operator/(const TaylorSeries& a, const BigComplex& s) {
    TaylorSeries r = a;
    for (auto& x : r.c_) x /= s;
    return r;
}
TaylorSeries operator/(const BigComplex& s, const TaylorSeries& a) {
    return reciprocal(a) * s;
}
TaylorSeries operator+(const TaylorSeries& a, long s) {
    return a + BigComplex(BigFloat::from_long(s, a.prec()));
}
TaylorSeries operator-(const TaylorSeries& a, long s) {
    return a - BigComplex(BigFloat::from_long(s, a.prec()));
}
TaylorSeries operator*(const TaylorSeries& a, long s) {
    return a * BigComplex(BigFloat::from_long(s, a.prec()));
}
TaylorSeries operator/(const TaylorSeries& a, long s) {
    return a / BigComplex(BigFloat::from_long(s, a.prec()));
}
TaylorSeries operator-(long s, const TaylorSeries& a) {
    return -(a - BigComplex(BigFloat::from_long(s, a.prec())));
}
TaylorSeries operator/(long s, const TaylorSeries& a) {
    return reciprocal(a) * BigComplex(BigFloat::from_long(s, a.prec()));
}

TaylorSeries sqrt(const TaylorSeries& a) {
    if (a.c_[0].is_zero()) throw DomainError("sqrt of series with zero constant term");
    TaylorSeries r(a.order(), a.prec());
    r.c_[0] = sqrt(a.c_[0]);
    BigComplex twice = r.c_[0] * 2;
    for (size_t n = 1; n < a.order(); ++n) {
        BigComplex acc(a.prec());
        for (size_t k = 1; k < n; ++k) acc += r.c_[k] * r.c_[n - k];
        r.c_[n] = (a.c_[n] - acc) / twice;
    }
    return r;
}

TaylorSeries exp(const TaylorSeries& a) {
    TaylorSeries u = nilpotent(a);
    TaylorSeries r(a.order(), a.prec());
    r.c_[0] = exp(a.c_[0]);
    for (size_t n = 1; n < a.order(); ++n) {
        BigComplex acc(a.prec());
        for (size_t k = 1; k <= n; ++k) acc += u.c_[k] * r.c_[n - k] * static_cast<long>(k);
        r.c_[n] = acc / static_cast<long>(n);
    }
    return r;
}

TaylorSeries log(const TaylorSeries& a) {
    if (a.c_[0].is_zero()) throw DomainError("log of series with zero constant term");
    // v = a/a0 - 1 is nilpotent; log a = log a0 + log(1+v).
    TaylorSeries v = a / a.c_[0];
    v.c_[0] = BigComplex(a.prec());
    TaylorSeries r(a.order(), a.prec());
    r.c_[0] = log(a.c_[0]);
    for (size_t n = 1; n < a.order(); ++n) {
        BigComplex acc(a.prec());
        for (size_t k = 1; k < n; ++k) acc += r.c_[k] * v.c_[n - k] * static_cast<long>(k);
        r.c_[n] = v.c_[n] - acc / static_cast<long>(n);
    }
    return r;
}

namespace {
// sin/cos (and sinh/cosh) of a nilpotent series by the coupled recurrence.
void circ_pair(const TaylorSeries& u, TaylorSeries& s, TaylorSeries& c, bool hyperbolic) {
    mpfr_prec_t p = u.prec();
    s.coeff(0) = BigComplex(p);
    c.coeff(0) = BigComplex(BigFloat::from_long(1, p));
    for (size_t n = 1; n < u.order(); ++n) {
        BigComplex sa(p), ca(p);
        for (size_t k = 1; k <= n; ++k) {
            sa += u.coeff(k) * c.coeff(n - k) * static_cast<long>(k);
            ca += u.coeff(k) * s.coeff(n - k) * static_cast<long>(k);
        }
        s.coeff(n) = sa / static_cast<long>(n);
        c.coeff(n) = hyperbolic ? ca / static_cast<long>(n) : -(ca / static_cast<long>(n));
    }
}
} // namespace

TaylorSeries sin(const TaylorSeries& a) {
    TaylorSeries u = nilpotent(a);
    TaylorSeries s(a.order(), a.prec()), c(a.order(), a.prec());
    circ_pair(u, s, c, false);
    return s * cos(a.c_[0]) + c * sin(a.c_[0]);
}

TaylorSeries cos(const TaylorSeries& a) {
    TaylorSeries u = nilpotent(a);
    TaylorSeries s(a.order(), a.prec()), c(a.order(), a.prec());
    circ_pair(u, s, c, false);
    return c * cos(a.c_[0]) - s * sin(a.c_[0]);
}

TaylorSeries sinh(const TaylorSeries& a) {
    TaylorSeries u = nilpotent(a);
    TaylorSeries s(a.order(), a.prec()), c(a.order(), a.prec());
    circ_pair(u, s, c, true);
    return s * cosh(a.c_[0]) + c * sinh(a.c_[0]);
}

TaylorSeries cosh(const TaylorSeries& a) {
    TaylorSeries u = nilpotent(a);
    TaylorSeries s(a.order(), a.prec()), c(a.order(), a.prec());
    circ_pair(u, s, c, true);
    return c * cosh(a.c_[0]) + s * sinh(a.c_[0]);
}

TaylorSeries pow(const TaylorSeries& a, const BigComplex& alpha) {
    if (a.c_[0].is_zero()) throw DomainError("pow of series with zero constant term");
    // a = a0 (1+v); (1+v)^alpha by n P_n = sum_k (alpha k - (n-k)) v_k P_{n-k}.
    TaylorSeries v = a / a.c_[0];
    v.c_[0] = BigComplex(a.prec());
    TaylorSeries r(a.order(), a.prec());
    r.c_[0] = BigComplex(BigFloat::from_long(1, a.prec()));
    for (size_t n = 1; n < a.order(); ++n) {
        BigComplex acc(a.prec());
        for (size_t k = 1; k <= n; ++k) {
            BigComplex w = alpha * static_cast<long>(k) - BigComplex(BigFloat::from_long(static_cast<long>(n - k), a.prec()));
            acc += w * v.c_[k] * r.c_[n - k];
        }
        r.c_[n] = acc / static_cast<long>(n);
    }
    return r * pow(a.c_[0], alpha);
}

TaylorSeries pow_si(const TaylorSeries& a, long e) {
    if (e == 0) return TaylorSeries::constant(BigComplex(BigFloat::from_long(1, a.prec())), a.order());
    bool inv = e < 0;
    unsigned long n = static_cast<unsigned long>(inv ? -e : e);
    TaylorSeries base = a;
    TaylorSeries acc = TaylorSeries::constant(BigComplex(BigFloat::from_long(1, a.prec())), a.order());
    while (n) {
        if (n & 1UL) acc = acc * base;
        n >>= 1UL;
        if (n) base = base * base;
    }
    return inv ? reciprocal(acc) : acc;
}

BigComplex TaylorSeries::derivative(size_t k) const {
    if (k >= order()) throw DomainError("derivative order beyond series truncation");
    BigComplex r = c_[k];
    for (size_t j = 2; j <= k; ++j) r = r * static_cast<long>(j);
    return r;
}

} // namespace ramv
