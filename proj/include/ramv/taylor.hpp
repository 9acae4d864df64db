#pragma once

#include <vector>

#include "ramv/bigcomplex.hpp"

namespace ramv {

// Truncated Taylor series sum_k c[k] h^k over BigComplex, fixed order.
// Summation tails use it to extract exact high derivatives of structured term
// formulas: a formula templated on the scalar type evaluates equally at a
// point (BigComplex) or along an expansion (TaylorSeries).  Functions of a
// series with nonzero constant term split off the constant first, so the
// recurrences only ever run on nilpotent parts and stay numerically stable.
class TaylorSeries {
public:
    TaylorSeries(size_t order, mpfr_prec_t bits);

    // The expansion variable n0 + h.
    static TaylorSeries variable(const BigComplex& n0, size_t order);
    static TaylorSeries constant(const BigComplex& value, size_t order);

    size_t order() const { return c_.size(); }
    mpfr_prec_t prec() const { return bits_; }
    const BigComplex& coeff(size_t k) const { return c_[k]; }
    BigComplex& coeff(size_t k) { return c_[k]; }
    const BigComplex& value() const { return c_[0]; }

    friend TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b);
    friend TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b);
    friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b);
    friend TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b);
    TaylorSeries operator-() const;

    friend TaylorSeries operator+(const TaylorSeries& a, const BigComplex& s);
    friend TaylorSeries operator+(const BigComplex& s, const TaylorSeries& a) { return a + s; }
    friend TaylorSeries operator-(const TaylorSeries& a, const BigComplex& s);
    friend TaylorSeries operator-(const BigComplex& s, const TaylorSeries& a) { return -(a - s); }
    friend TaylorSeries operator*(const TaylorSeries& a, const BigComplex& s);
    friend TaylorSeries operator*(const BigComplex& s, const TaylorSeries& a) { return a * s; }
    friend TaylorSeries operator/(const TaylorSeries& a, const BigComplex& s);
    friend TaylorSeries operator/(const BigComplex& s, const TaylorSeries& a);
    friend TaylorSeries operator+(const TaylorSeries& a, long s);
    friend TaylorSeries operator-(const TaylorSeries& a, long s);
    friend TaylorSeries operator*(const TaylorSeries& a, long s);
    friend TaylorSeries operator/(const TaylorSeries& a, long s);
    friend TaylorSeries operator*(long s, const TaylorSeries& a) { return a * s; }
    friend TaylorSeries operator-(long s, const TaylorSeries& a);
    friend TaylorSeries operator/(long s, const TaylorSeries& a);

    friend TaylorSeries reciprocal(const TaylorSeries& a); // a0 != 0
    friend TaylorSeries sqrt(const TaylorSeries& a);       // a0 != 0
    friend TaylorSeries exp(const TaylorSeries& a);
    friend TaylorSeries log(const TaylorSeries& a); // a0 != 0
    friend TaylorSeries sin(const TaylorSeries& a);
    friend TaylorSeries cos(const TaylorSeries& a);
    friend TaylorSeries sinh(const TaylorSeries& a);
    friend TaylorSeries cosh(const TaylorSeries& a);
    friend TaylorSeries tan(const TaylorSeries& a) { return sin(a) / cos(a); }
    friend TaylorSeries cot(const TaylorSeries& a) { return cos(a) / sin(a); }
    friend TaylorSeries coth(const TaylorSeries& a) { return cosh(a) / sinh(a); }
    friend TaylorSeries tanh(const TaylorSeries& a) { return sinh(a) / cosh(a); }
    friend TaylorSeries pow(const TaylorSeries& a, const BigComplex& alpha); // a0 != 0
    friend TaylorSeries pow_si(const TaylorSeries& a, long e);

    // f^(k)(n0) = k! * c[k].
    BigComplex derivative(size_t k) const;

private:
    BigComplex zero() const;
    mpfr_prec_t bits_;
    std::vector<BigComplex> c_;
};

} // namespace ramv
